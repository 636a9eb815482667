//! δ-vectors of lecture hall polytopes through the ascent statistic on
//! s-inversion sequences, plus predicates on δ-vectors.
//!
//! An ascent at position `i` (`0 <= i < d`) means `e_i/s_i < e_{i+1}/s_{i+1}`,
//! with the boundary convention `e_0 = 0`, `s_0 = 1`: position 0 is an ascent
//! exactly when `e_1 > 0`. δ_j counts the inversion sequences with `j` ascents.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hall::SSequence;
use crate::lattice::cmp_ratio;

/// `e` with `0 <= e_i < s_i` for a companion s-sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionSequence(Vec<i64>);

impl InversionSequence {
    pub fn new(e: Vec<i64>, s: &SSequence) -> Result<Self> {
        if e.len() != s.dim() {
            return Err(Error::InvalidInversionSequence(format!(
                "length {} does not match d = {}",
                e.len(),
                s.dim()
            )));
        }
        for (i, (&ei, &si)) in e.iter().zip(s.as_slice()).enumerate() {
            if ei < 0 || ei >= si {
                return Err(Error::InvalidInversionSequence(format!(
                    "e_{} = {ei} outside [0, {si})",
                    i + 1
                )));
            }
        }
        Ok(InversionSequence(e))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// `(δ_0, ..., δ_d)`, always stored with trailing zeros up to index `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaVector(pub Vec<u128>);

impl DeltaVector {
    pub fn as_slice(&self) -> &[u128] {
        &self.0
    }

    /// Ambient dimension `d` (the vector has `d + 1` entries).
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Largest index with a nonzero entry.
    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|&x| x != 0).unwrap_or(0)
    }

    pub fn sum(&self) -> u128 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u128 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        is_symmetric(self)
    }

    pub fn is_unimodal(&self) -> bool {
        is_unimodal(self)
    }

    /// Symmetric of full degree `d`: the polytope is unimodularly
    /// equivalent to a reflexive one.
    pub fn is_reflexive(&self) -> bool {
        self.is_symmetric() && self.degree() == self.dim()
    }

    /// Polynomial product, padded with zeros to `dim + 1` entries.
    pub fn product(&self, other: &DeltaVector, dim: usize) -> DeltaVector {
        let mut out = vec![0u128; dim.max(self.0.len() + other.0.len() - 2) + 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out.truncate(dim + 1);
        DeltaVector(out)
    }
}

#[inline]
fn is_ascent(prev_e: i64, prev_s: i64, e: i64, s: i64) -> bool {
    cmp_ratio(prev_e, prev_s, e, s) == Ordering::Less
}

fn ascents_raw(e: &[i64], s: &[i64]) -> usize {
    let mut count = usize::from(e[0] > 0);
    for i in 1..e.len() {
        if is_ascent(e[i - 1], s[i - 1], e[i], s[i]) {
            count += 1;
        }
    }
    count
}

pub fn ascent_count(e: &InversionSequence, s: &SSequence) -> Result<usize> {
    // re-validate against this particular s
    let e = InversionSequence::new(e.0.clone(), s)?;
    Ok(ascents_raw(&e.0, s.as_slice()))
}

/// Number of inversion sequences, i.e. the enumeration cost of
/// [`delta_vector`].
pub fn enumeration_cost(s: &SSequence) -> u128 {
    s.product()
}

/// δ-vector by exhaustive enumeration of the `prod s_i` inversion sequences.
pub fn delta_vector(s: &SSequence) -> DeltaVector {
    let sv = s.as_slice();
    let d = sv.len();
    let mut delta = vec![0u128; d + 1];
    let mut e = vec![0i64; d];
    // asc_prefix[i] = ascents among positions 0..i (i.e. using e_1..e_i)
    let mut asc_prefix = vec![0usize; d + 1];
    recompute_from(&e, sv, &mut asc_prefix, 0);
    loop {
        delta[asc_prefix[d]] += 1;
        // advance mixed-radix counter, least significant = last coordinate
        let mut i = d;
        loop {
            if i == 0 {
                return DeltaVector(delta);
            }
            i -= 1;
            e[i] += 1;
            if e[i] < sv[i] {
                break;
            }
            e[i] = 0;
        }
        recompute_from(&e, sv, &mut asc_prefix, i);
    }
}

fn recompute_from(e: &[i64], s: &[i64], asc_prefix: &mut [usize], from: usize) {
    for i in from..e.len() {
        let up = if i == 0 {
            e[0] > 0
        } else {
            is_ascent(e[i - 1], s[i - 1], e[i], s[i])
        };
        asc_prefix[i + 1] = asc_prefix[i] + usize::from(up);
    }
}

/// [`delta_vector`] behind the enumeration budget.
pub fn delta_vector_within(s: &SSequence, budget: &Budget) -> Result<DeltaVector> {
    budget.check(enumeration_cost(s))?;
    Ok(delta_vector(s))
}

/// Palindromic after trimming trailing zeros.
pub fn is_symmetric(dv: &DeltaVector) -> bool {
    let m = dv.degree();
    (0..=m).all(|i| dv.0[i] == dv.0[m - i])
}

/// Weakly rises to a peak, then weakly falls.
pub fn is_unimodal(dv: &DeltaVector) -> bool {
    let v = &dv.0;
    let mut i = 1;
    while i < v.len() && v[i] >= v[i - 1] {
        i += 1;
    }
    while i < v.len() && v[i] <= v[i - 1] {
        i += 1;
    }
    i >= v.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> SSequence {
        SSequence::new(v.to_vec()).unwrap()
    }

    fn asc(e: &[i64], s: &[i64]) -> usize {
        let s = seq(s);
        ascent_count(&InversionSequence::new(e.to_vec(), &s).unwrap(), &s).unwrap()
    }

    #[test]
    fn ascent_examples() {
        assert_eq!(asc(&[1], &[2]), 1);
        assert_eq!(asc(&[0], &[2]), 0);
        assert_eq!(asc(&[1, 2], &[2, 3]), 2);
        assert_eq!(asc(&[1, 1], &[2, 3]), 1);
        assert_eq!(asc(&[0, 0, 0], &[3, 3, 3]), 0);
    }

    #[test]
    fn inversion_sequence_bounds() {
        let s = seq(&[2, 3]);
        assert!(InversionSequence::new(vec![2, 0], &s).is_err());
        assert!(InversionSequence::new(vec![0, -1], &s).is_err());
        assert!(InversionSequence::new(vec![0], &s).is_err());
        let e = InversionSequence::new(vec![1, 2], &s).unwrap();
        assert!(ascent_count(&e, &seq(&[2, 2])).is_err());
    }

    /// Decodes every index into an inversion sequence and counts from scratch.
    fn delta_naive(s: &[i64]) -> Vec<u128> {
        let d = s.len();
        let mut out = vec![0u128; d + 1];
        let total: i64 = s.iter().product();
        for mut code in 0..total {
            let mut e = vec![0; d];
            for i in (0..d).rev() {
                e[i] = code % s[i];
                code /= s[i];
            }
            out[ascents_raw(&e, s)] += 1;
        }
        out
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_vector(&seq(&[1, 1, 1])).0, vec![1, 0, 0, 0]);
        assert_eq!(delta_vector(&seq(&[2, 3])).0, vec![1, 4, 1]);
        assert_eq!(delta_vector(&seq(&[2, 1, 2])).0, vec![1, 2, 1, 0]);
        assert_eq!(delta_vector(&seq(&[2])).0, vec![1, 1]);
    }

    #[test]
    fn incremental_counter_matches_naive() {
        for s in [vec![3, 1, 4, 1], vec![2, 5, 3], vec![6], vec![4, 4, 2, 3]] {
            assert_eq!(delta_vector(&seq(&s)).0, delta_naive(&s));
        }
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_symmetric(&DeltaVector(vec![1, 4, 1])));
        assert!(is_symmetric(&DeltaVector(vec![1, 2, 1, 0])));
        assert!(!is_symmetric(&DeltaVector(vec![1, 3, 0])));
        assert!(is_symmetric(&DeltaVector(vec![1, 0, 0, 0])));
    }

    #[test]
    fn unimodality_examples() {
        assert!(is_unimodal(&DeltaVector(vec![1, 4, 1])));
        assert!(is_unimodal(&DeltaVector(vec![1, 0, 0])));
        assert!(!is_unimodal(&DeltaVector(vec![1, 0, 2])));
        assert!(is_unimodal(&DeltaVector(vec![1, 3, 3, 0])));
        assert!(!is_unimodal(&DeltaVector(vec![1, 2, 1, 2])));
    }

    #[test]
    fn product_pads_to_dimension() {
        let a = DeltaVector(vec![1, 4, 1]);
        let b = DeltaVector(vec![1, 1]);
        assert_eq!(a.product(&b, 4).0, vec![1, 5, 5, 1, 0]);
    }

    #[test]
    fn budget_guard() {
        let s = seq(&[10, 10, 10]);
        assert!(delta_vector_within(&s, &Budget::new(999)).is_err());
        assert!(delta_vector_within(&s, &Budget::new(1000)).is_ok());
    }
}
