//! Brute-force Ehrhart computations, independent of the ascent statistic:
//! count lattice points of dilates, interpolate the Ehrhart polynomial, and
//! recover δ from `Ehr(λ) = δ(λ) / (1 - λ)^{d+1}`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::delta::DeltaVector;
use crate::error::{Error, Result};
use crate::hall::{self, SSequence};
use crate::lattice::Rational;

/// Counts, Ehrhart polynomial (ascending coefficients) and δ-vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EhrhartData {
    /// `i(P, t)` for `t = 0..=tmax` (at least `0..=d`).
    pub counts: Vec<u128>,
    #[serde(serialize_with = "serialize_rationals")]
    pub polynomial: Vec<Rational>,
    pub delta: DeltaVector,
}

fn big_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

fn serialize_rationals<S: Serializer>(coeffs: &[Rational], ser: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = ser.serialize_seq(Some(coeffs.len()))?;
    for c in coeffs {
        seq.serialize_element(&[big_to_json(c.numer()), big_to_json(c.denom())])?;
    }
    seq.end()
}

/// Cost of enumerating `tP`: its exact number of lattice points.
pub fn count_cost(s: &SSequence, t: i64) -> u128 {
    hall::count_points_dp(s, t)
}

/// `i(P, t)` by explicit enumeration.
pub fn count(s: &SSequence, t: i64, budget: &Budget) -> Result<u128> {
    if t < 0 {
        return Err(Error::Precondition(format!("dilation must be nonnegative, got {t}")));
    }
    if t == 0 {
        return Ok(1);
    }
    budget.check(count_cost(s, t))?;
    let mut n = 0u128;
    hall::for_each_lattice_point(s, t, |_| n += 1);
    Ok(n)
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `δ_j = Σ_{i<=j} (-1)^i C(d+1, i) counts[j-i]` for `j = 0..=d`.
pub fn delta_from_counts(counts: &[u128]) -> Result<DeltaVector> {
    if counts.is_empty() {
        return Err(Error::InconsistentCounts("no counts given".into()));
    }
    if counts[0] != 1 {
        return Err(Error::InconsistentCounts(format!(
            "i(P, 0) must be 1, got {}",
            counts[0]
        )));
    }
    let d = counts.len() - 1;
    let mut delta = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut acc: i128 = 0;
        for i in 0..=j {
            let term = binomial(d as u128 + 1, i as u128) as i128 * counts[j - i] as i128;
            acc += if i % 2 == 0 { term } else { -term };
        }
        if acc < 0 {
            return Err(Error::InconsistentCounts(format!("δ_{j} = {acc} is negative")));
        }
        delta.push(acc as u128);
    }
    Ok(DeltaVector(delta))
}

/// Coefficients (constant term first) of the unique polynomial of degree
/// `< values.len()` with `p(t) = values[t]`, via Newton forward differences.
pub fn interpolate(values: &[u128]) -> Vec<Rational> {
    let n = values.len();
    let mut diffs: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
    // forward[k] = Δ^k f(0)
    let mut forward = Vec::with_capacity(n);
    for k in 0..n {
        forward.push(diffs[0].clone());
        for i in 0..n - k - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    let mut coeffs = vec![Rational::zero(); n];
    // falling factorial t(t-1)...(t-k+1), in monomial basis
    let mut falling: Vec<BigInt> = vec![BigInt::one()];
    let mut factorial = BigInt::one();
    for (k, delta_k) in forward.iter().enumerate() {
        if k > 0 {
            factorial *= BigInt::from(k);
            let shift = BigInt::from(k - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &shift;
            }
            falling = next;
        }
        for (i, c) in falling.iter().enumerate() {
            coeffs[i] += Rational::new(c * delta_k, factorial.clone());
        }
    }
    coeffs
}

pub fn evaluate(poly: &[Rational], t: i64) -> Rational {
    let x = Rational::from_integer(BigInt::from(t));
    poly.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * &x + c)
}

/// Ehrhart polynomial of `P^(s)` from counts at `t = 0..=d`.
pub fn ehrhart_polynomial(s: &SSequence, budget: &Budget) -> Result<Vec<Rational>> {
    let counts = counts_up_to(s, s.dim() as i64, budget)?;
    Ok(interpolate(&counts))
}

fn counts_up_to(s: &SSequence, tmax: i64, budget: &Budget) -> Result<Vec<u128>> {
    let cost: u128 = (1..=tmax).map(|t| count_cost(s, t)).sum();
    budget.check(cost)?;
    let unlimited = Budget::unlimited();
    (0..=tmax).map(|t| count(s, t, &unlimited)).collect()
}

/// Full oracle pass: counts for `t = 0..=max(d, tmax)`, the interpolating
/// polynomial through `t = 0..=d`, and δ recovered from the counts. Counts
/// beyond `d` must agree with the polynomial.
pub fn ehrhart_data(s: &SSequence, tmax: Option<i64>, budget: &Budget) -> Result<EhrhartData> {
    let d = s.dim() as i64;
    let tmax = tmax.unwrap_or(d).max(d);
    let counts = counts_up_to(s, tmax, budget)?;
    let base = &counts[..=d as usize];
    let polynomial = interpolate(base);
    let delta = delta_from_counts(base)?;
    for (t, &c) in counts.iter().enumerate().skip(d as usize + 1) {
        if evaluate(&polynomial, t as i64) != Rational::from_integer(BigInt::from(c)) {
            return Err(Error::Inconsistency(format!(
                "Ehrhart polynomial of {s} mispredicts i(P, {t}) = {c}"
            )));
        }
    }
    Ok(EhrhartData {
        counts,
        polynomial,
        delta,
    })
}

/// δ-vector through counts, the oracle route.
pub fn oracle_delta(s: &SSequence, budget: &Budget) -> Result<DeltaVector> {
    let counts = counts_up_to(s, s.dim() as i64, budget)?;
    delta_from_counts(&counts)
}
