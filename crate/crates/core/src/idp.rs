//! Integer decomposition property.
//!
//! For weakly increasing `s` a point `x` of `kP` splits off a lattice point of
//! `P` greedily: take the least `j` with `x_j > (k-1) s_j` and peel
//! `y = (0, .., 0, x_j - (k-1) s_j, .., x_d - (k-1) s_d)`. Iterating gives a
//! full `k`-fold decomposition. For arbitrary `s` the property is decided by
//! brute force, level by level: `kP ∩ Z^d = ((k-1)P ∩ Z^d) + (P ∩ Z^d)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hall::{self, SSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub target: Vec<i64>,
    pub parts: Vec<Vec<i64>>,
}

fn ensure_in_dilate(s: &SSequence, k: i64, x: &[i64]) -> Result<()> {
    if !hall::contains(s, k, x, false)? {
        return Err(Error::Precondition(format!("{x:?} is not in {k}P^({s})")));
    }
    Ok(())
}

/// One peel step for weakly increasing `s`: returns `y ∈ P` with
/// `x - y ∈ (k-1)P`.
pub fn greedy_peel(s: &SSequence, k: i64, x: &[i64]) -> Result<Vec<i64>> {
    if k < 2 {
        return Err(Error::Precondition(format!("peeling needs k >= 2, got {k}")));
    }
    if !s.is_weakly_increasing() {
        return Err(Error::Unsupported(format!(
            "greedy peel needs a weakly increasing sequence, got {s}"
        )));
    }
    ensure_in_dilate(s, k, x)?;
    let sv = s.as_slice();
    let level = |i: usize| (k - 1) * sv[i];
    let y: Vec<i64> = match (0..sv.len()).find(|&i| x[i] > level(i)) {
        None => vec![0; sv.len()],
        Some(j) => (0..sv.len())
            .map(|i| if i < j { 0 } else { x[i] - level(i) })
            .collect(),
    };
    let rest: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a - b).collect();
    if !hall::contains_unchecked(sv, 1, &y, false) {
        return Err(Error::Inconsistency(format!(
            "peeled {y:?} from {x:?} in {k}P^({s}) is not in P"
        )));
    }
    if !hall::contains_unchecked(sv, k - 1, &rest, false) {
        return Err(Error::Inconsistency(format!(
            "remainder {rest:?} of {x:?} in {k}P^({s}) is not in {}P",
            k - 1
        )));
    }
    Ok(y)
}

fn decompose_increasing(s: &SSequence, k: i64, x: &[i64]) -> Result<Vec<Vec<i64>>> {
    let mut parts = Vec::with_capacity(k as usize);
    let mut rest = x.to_vec();
    for level in (2..=k).rev() {
        let y = greedy_peel(s, level, &rest)?;
        rest.iter_mut().zip(&y).for_each(|(r, v)| *r -= v);
        parts.push(y);
    }
    parts.push(rest);
    Ok(parts)
}

/// `x = x_1 + ... + x_k` with every `x_i ∈ P ∩ Z^d`, for weakly monotone `s`.
/// Weakly decreasing sequences go through the reflection onto `reverse(s)`.
pub fn decompose(s: &SSequence, k: i64, x: &[i64]) -> Result<Decomposition> {
    if k < 1 {
        return Err(Error::Precondition(format!("k must be positive, got {k}")));
    }
    ensure_in_dilate(s, k, x)?;
    let parts = if s.is_weakly_increasing() {
        decompose_increasing(s, k, x)?
    } else if s.is_weakly_decreasing() {
        let r = s.reverse();
        let w = hall::reflect_point(s, k, x);
        decompose_increasing(&r, k, &w)?
            .iter()
            .map(|p| hall::reflect_point(&r, 1, p))
            .collect()
    } else {
        return Err(Error::Unsupported(format!(
            "greedy decomposition needs a weakly monotone sequence, got {s}"
        )));
    };
    let mut sum = vec![0i64; s.dim()];
    for p in &parts {
        if !hall::contains_unchecked(s.as_slice(), 1, p, false) {
            return Err(Error::Inconsistency(format!("part {p:?} of {x:?} is not in P^({s})")));
        }
        sum.iter_mut().zip(p).for_each(|(a, b)| *a += b);
    }
    if sum != x {
        return Err(Error::Inconsistency(format!("parts of {x:?} sum to {sum:?}")));
    }
    Ok(Decomposition {
        target: x.to_vec(),
        parts,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdpWitness {
    pub k: usize,
    pub point: Vec<i64>,
    /// Always empty: no decomposition exists.
    pub certificate: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdpReport {
    pub verdict: bool,
    /// Largest level verified, or the failing level.
    pub k_checked: usize,
    pub witness: Option<IdpWitness>,
}

/// `max(2, d - 1)`.
pub fn default_k_max(d: usize) -> usize {
    d.saturating_sub(1).max(2)
}

/// Worst-case number of membership tests for [`is_idp`].
pub fn idp_cost(s: &SSequence, k_max: usize) -> u128 {
    let base = hall::count_points_dp(s, 1);
    (2..=k_max as i64)
        .map(|k| hall::count_points_dp(s, k).saturating_mul(base))
        .fold(0u128, u128::saturating_add)
}

/// Brute-force IDP check up to level `k_max` (default `max(2, d - 1)`).
/// On failure the witness is the least failing point of the smallest
/// failing level, in enumeration order.
pub fn is_idp(s: &SSequence, k_max: Option<usize>, budget: &Budget) -> Result<IdpReport> {
    let k_max = k_max.unwrap_or_else(|| default_k_max(s.dim())).max(2);
    budget.check(idp_cost(s, k_max))?;
    let sv = s.as_slice();
    let base = hall::lattice_points(s, 1);
    for k in 2..=k_max {
        let targets = hall::lattice_points(s, k as i64);
        let failure = targets.par_iter().find_first(|x| {
            !base.iter().any(|y| {
                let rest: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                hall::contains_unchecked(sv, k as i64 - 1, &rest, false)
            })
        });
        if let Some(x) = failure {
            return Ok(IdpReport {
                verdict: false,
                k_checked: k,
                witness: Some(IdpWitness {
                    k,
                    point: x.clone(),
                    certificate: Vec::new(),
                }),
            });
        }
    }
    Ok(IdpReport {
        verdict: true,
        k_checked: k_max,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> SSequence {
        SSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn peel_examples() {
        let s = seq(&[1, 2]);
        assert_eq!(greedy_peel(&s, 2, &[1, 3]).unwrap(), vec![0, 1]);
        assert_eq!(greedy_peel(&s, 2, &[2, 4]).unwrap(), vec![1, 2]);
        assert_eq!(greedy_peel(&seq(&[2, 3]), 3, &[0, 0]).unwrap(), vec![0, 0]);
    }

    #[test]
    fn peel_preconditions() {
        let s = seq(&[1, 2]);
        assert!(matches!(greedy_peel(&s, 2, &[3, 4]), Err(Error::Precondition(_))));
        assert!(matches!(greedy_peel(&s, 1, &[0, 1]), Err(Error::Precondition(_))));
        assert!(matches!(
            greedy_peel(&seq(&[3, 2]), 2, &[0, 0]),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&seq(&[1, 2]), 2, &[1, 3]).unwrap();
        assert_eq!(d.parts, vec![vec![0, 1], vec![1, 2]]);
        let d = decompose(&seq(&[2, 5, 7]), 1, &[1, 3, 5]).unwrap();
        assert_eq!(d.parts, vec![vec![1, 3, 5]]);
        let s = seq(&[2, 2]);
        let d = decompose(&s, 2, &[2, 4]).unwrap();
        assert_eq!(d.parts.len(), 2);
        let sum: Vec<i64> = (0..2).map(|i| d.parts.iter().map(|p| p[i]).sum()).collect();
        assert_eq!(sum, vec![2, 4]);
    }

    #[test]
    fn decompose_decreasing_sequences() {
        let s = seq(&[5, 3, 2]);
        for k in 1..=3 {
            for x in hall::lattice_points(&s, k) {
                let d = decompose(&s, k, &x).unwrap();
                assert_eq!(d.parts.len(), k as usize);
            }
        }
        assert!(matches!(
            decompose(&seq(&[2, 5, 3]), 2, &[0, 0, 0]),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn idp_examples() {
        let b = Budget::default();
        for s in [vec![1, 1, 1], vec![2, 3], vec![2, 1, 2]] {
            let r = is_idp(&seq(&s), None, &b).unwrap();
            assert!(r.verdict, "{s:?}");
            assert!(r.witness.is_none());
        }
        assert_eq!(is_idp(&seq(&[2, 3]), Some(4), &b).unwrap().k_checked, 4);
        assert_eq!(default_k_max(1), 2);
        assert_eq!(default_k_max(5), 4);
    }

    #[test]
    fn idp_budget() {
        assert!(matches!(
            is_idp(&seq(&[6, 6, 6, 6]), Some(4), &Budget::new(1000)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
