//! Free sums and the `(s, 1, t)` compositions.
//!
//! Translating `P^(s,t)` by `-(0, .., 0, t_1, .., t_e)` gives the free sum of
//! `P^(s)` and `psi(P^(rev t))`, where `psi(z)_i = -z_{e+1-i}`. Inserting a
//! 1 between the blocks multiplies δ-polynomials, which is what the
//! Gorenstein and IDP composition statements rest on.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::budget::Budget;
use crate::classify;
use crate::delta::{delta_vector_within, DeltaVector};
use crate::error::{Error, Result};
use crate::hall::{self, PolytopeVRep, SSequence};
use crate::idp::{self, IdpReport};
use crate::lattice;
use crate::oracle;

/// `(s_1, .., s_d, 1, t_1, .., t_e)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeSumSpec {
    pub left: SSequence,
    pub right: SSequence,
    pub composite: SSequence,
}

impl FreeSumSpec {
    pub fn new(left: &SSequence, right: &SSequence) -> Self {
        let one = SSequence::new(vec![1]).expect("valid");
        FreeSumSpec {
            left: left.clone(),
            right: right.clone(),
            composite: left.concat(&one).concat(right),
        }
    }
}

/// `conv((P x 0) ∪ (0 x Q))` for polytopes that both have the origin as a
/// vertex.
pub fn free_sum(p: &PolytopeVRep, q: &PolytopeVRep) -> Result<PolytopeVRep> {
    if !p.contains_origin_vertex() {
        return Err(Error::Precondition("left polytope lacks the origin".into()));
    }
    if !q.contains_origin_vertex() {
        return Err(Error::Precondition("right polytope lacks the origin".into()));
    }
    let (d, e) = (p.dim, q.dim);
    let mut seen = BTreeSet::new();
    let mut vertices = Vec::new();
    let left = p.vertices.iter().map(|v| [v.as_slice(), &vec![0; e]].concat());
    let right = q.vertices.iter().map(|w| [&vec![0; d], w.as_slice()].concat());
    for v in left.chain(right) {
        if seen.insert(v.clone()) {
            vertices.push(v);
        }
    }
    PolytopeVRep::new(d + e, vertices)
}

/// `psi(z)_i = -z_{e+1-i}`.
fn psi(z: &[i64]) -> Vec<i64> {
    z.iter().rev().map(|&x| -x).collect()
}

fn translation(d: usize, t: &SSequence) -> Vec<i64> {
    let mut v = vec![0; d];
    v.extend_from_slice(t.as_slice());
    v
}

/// Lattice points of `k (P^(s) ⊕ psi(P^(rev t)))`: pairs whose gauges
/// `x_d / s_d` and `z_e / rt_e` sum to at most `k`.
fn free_sum_points(s: &SSequence, t: &SSequence, k: i64) -> Vec<Vec<i64>> {
    let rt = t.reverse();
    let (sd, te) = (s.at(s.dim()) as i128, rt.at(rt.dim()) as i128);
    let left = hall::lattice_points(s, k);
    let right = hall::lattice_points(&rt, k);
    let mut out = Vec::new();
    for x in &left {
        for z in &right {
            let gx = *x.last().expect("d >= 1") as i128;
            let gz = *z.last().expect("e >= 1") as i128;
            if gx * te + gz * sd <= k as i128 * sd * te {
                out.push([x.as_slice(), &psi(z)].concat());
            }
        }
    }
    out
}

fn free_sum_cost(s: &SSequence, t: &SSequence, kmax: i64) -> u128 {
    let rt = t.reverse();
    (1..=kmax)
        .map(|k| hall::count_points_dp(s, k).saturating_mul(hall::count_points_dp(&rt, k)))
        .fold(0u128, u128::saturating_add)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    pub vertices_match: bool,
    pub points_match: bool,
    pub sequence_delta: DeltaVector,
    pub free_sum_delta: DeltaVector,
}

impl DecompositionCheck {
    pub fn holds(&self) -> bool {
        self.vertices_match && self.points_match && self.sequence_delta == self.free_sum_delta
    }
}

/// Compares the translated `P^(s,t)` with the free sum of `P^(s)` and
/// `psi(P^(rev t))`: vertex sets, lattice points at dilation 1, and
/// δ-vectors (the free-sum side counted point by point through its gauge).
pub fn check_decomposition(s: &SSequence, t: &SSequence, budget: &Budget) -> Result<DecompositionCheck> {
    let st = s.concat(t);
    let n = st.dim();
    budget.check(free_sum_cost(s, t, n as i64).saturating_add(oracle::count_cost(&st, 1)))?;
    let shift = translation(s.dim(), t);
    let translate = |v: &Vec<i64>| -> Vec<i64> { v.iter().zip(&shift).map(|(a, b)| a - b).collect() };

    let q_vertices = hall::vertices(&t.reverse()).vertices.iter().map(|z| psi(z)).collect();
    let q = PolytopeVRep::new(t.dim(), q_vertices)?;
    let fs = free_sum(&hall::vertices(s), &q)?;
    let lhs: BTreeSet<Vec<i64>> = hall::vertices(&st).vertices.iter().map(translate).collect();
    let vertices_match = lhs == fs.vertices.iter().cloned().collect();

    let lhs: BTreeSet<Vec<i64>> = hall::lattice_points(&st, 1).iter().map(translate).collect();
    let rhs: BTreeSet<Vec<i64>> = free_sum_points(s, t, 1).into_iter().collect();
    let points_match = lhs == rhs;

    let counts: Vec<u128> = (0..=n as i64)
        .map(|k| if k == 0 { 1 } else { free_sum_points(s, t, k).len() as u128 })
        .collect();
    Ok(DecompositionCheck {
        vertices_match,
        points_match,
        sequence_delta: delta_vector_within(&st, budget)?,
        free_sum_delta: oracle::delta_from_counts(&counts)?,
    })
}

/// Every defining inequality of `P^(s)` has right-hand side 0 or 1, which for
/// lecture hall polytopes means `s_d = 1`.
pub fn braun_condition(s: &SSequence) -> bool {
    hall::hrep(s, 1)
        .map(|hs| hs.iter().all(|h| h.b == 0 || h.b == 1))
        .unwrap_or(false)
}

/// Whether `P^(s) ∩ Z^d` spans `Z^d` as a lattice.
pub fn lattice_span_is_full(s: &SSequence) -> Result<bool> {
    lattice::span_is_full(&hall::lattice_points(s, 1), s.dim())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinComposition {
    pub composite: SSequence,
    pub left_index: u32,
    pub right_index: u32,
    pub predicted_index: u32,
    pub left_delta: DeltaVector,
    pub right_delta: DeltaVector,
    pub composite_delta: DeltaVector,
    pub product_matches: bool,
    pub symmetric_of_expected_degree: bool,
    pub confirmed_index: Option<u32>,
}

impl GorensteinComposition {
    pub fn verified(&self) -> bool {
        self.product_matches
            && self.symmetric_of_expected_degree
            && self.confirmed_index == Some(self.predicted_index)
    }
}

/// δ of `(s, 1, t)` against the product `δ(s) δ(t)`.
pub fn delta_product_holds(s: &SSequence, t: &SSequence, budget: &Budget) -> Result<bool> {
    let spec = FreeSumSpec::new(s, t);
    let product = delta_vector_within(s, budget)?.product(&delta_vector_within(t, budget)?, spec.composite.dim());
    Ok(delta_vector_within(&spec.composite, budget)? == product)
}

/// Composes two Gorenstein sequences of indices `k` and `l` into `(s, 1, t)`
/// with predicted index `k + l`, and checks the prediction.
pub fn gorenstein_compose(s: &SSequence, t: &SSequence, budget: &Budget) -> Result<GorensteinComposition> {
    let index = |side: &str, x: &SSequence| -> Result<u32> {
        classify::gorenstein_index(x, budget)?
            .ok_or_else(|| Error::Precondition(format!("{side} sequence {x} is not Gorenstein")))
    };
    let (k, l) = (index("left", s)?, index("right", t)?);
    let spec = FreeSumSpec::new(s, t);
    let n = spec.composite.dim();
    let left_delta = delta_vector_within(s, budget)?;
    let right_delta = delta_vector_within(t, budget)?;
    let composite_delta = delta_vector_within(&spec.composite, budget)?;
    let product_matches = composite_delta == left_delta.product(&right_delta, n);
    let predicted = k + l;
    let expected_degree = (n + 1).checked_sub(predicted as usize);
    let symmetric_of_expected_degree =
        composite_delta.is_symmetric() && expected_degree == Some(composite_delta.degree());
    Ok(GorensteinComposition {
        composite: spec.composite.clone(),
        left_index: k,
        right_index: l,
        predicted_index: predicted,
        left_delta,
        right_delta,
        composite_delta,
        product_matches,
        symmetric_of_expected_degree,
        confirmed_index: classify::gorenstein_index(&spec.composite, budget)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdpComposition {
    pub composite: SSequence,
    pub report: IdpReport,
}

/// Composes two IDP sequences into `(s, 1, t)` and runs the brute-force IDP
/// check on the result.
pub fn idp_compose(s: &SSequence, t: &SSequence, k_max: Option<usize>, budget: &Budget) -> Result<IdpComposition> {
    for (side, x) in [("left", s), ("right", t)] {
        let r = idp::is_idp(x, k_max, budget)?;
        if !r.verdict {
            return Err(Error::Precondition(format!(
                "{side} sequence {x} fails IDP at k = {}",
                r.k_checked
            )));
        }
        if !lattice_span_is_full(x)? {
            return Err(Error::Inconsistency(format!(
                "lattice points of P^({x}) do not span Z^{}",
                x.dim()
            )));
        }
    }
    let composite = FreeSumSpec::new(s, t).composite;
    let report = idp::is_idp(&composite, k_max, budget)?;
    Ok(IdpComposition { composite, report })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> SSequence {
        SSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn free_sum_examples() {
        let seg = PolytopeVRep::new(1, vec![vec![0], vec![2]]).unwrap();
        let fs = free_sum(&seg, &seg).unwrap();
        assert_eq!(fs.vertices, vec![vec![0, 0], vec![2, 0], vec![0, 2]]);
        let origin = PolytopeVRep::new(1, vec![vec![0]]).unwrap();
        assert_eq!(free_sum(&seg, &origin).unwrap().vertices, vec![vec![0, 0], vec![2, 0]]);
        let shifted = PolytopeVRep::new(1, vec![vec![1], vec![2]]).unwrap();
        assert!(matches!(free_sum(&seg, &shifted), Err(Error::Precondition(_))));
    }

    #[test]
    fn decomposition_examples() {
        let b = Budget::default();
        for (s, t) in [(vec![2], vec![2]), (vec![2, 3], vec![2]), (vec![1], vec![1]), (vec![1, 3], vec![2, 1])] {
            let c = check_decomposition(&seq(&s), &seq(&t), &b).unwrap();
            assert!(c.holds(), "{s:?} {t:?}: {c:?}");
        }
    }

    #[test]
    fn braun_examples() {
        assert!(braun_condition(&seq(&[2, 1])));
        assert!(!braun_condition(&seq(&[2, 3])));
        assert!(braun_condition(&seq(&[1])));
    }

    #[test]
    fn gorenstein_examples() {
        let b = Budget::default();
        let g = gorenstein_compose(&seq(&[2]), &seq(&[2]), &b).unwrap();
        assert_eq!(g.composite, seq(&[2, 1, 2]));
        assert_eq!(g.predicted_index, 2);
        assert_eq!(g.composite_delta.0, vec![1, 2, 1, 0]);
        assert!(g.verified());

        let g = gorenstein_compose(&seq(&[2, 3]), &seq(&[2]), &b).unwrap();
        assert_eq!(g.composite, seq(&[2, 3, 1, 2]));
        assert_eq!(g.composite_delta.0, vec![1, 5, 5, 1, 0]);
        assert_eq!(g.predicted_index, 2);
        assert!(g.verified());

        let g = gorenstein_compose(&seq(&[1]), &seq(&[1]), &b).unwrap();
        assert_eq!((g.left_index, g.right_index, g.predicted_index), (2, 2, 4));
        assert!(g.verified());

        assert!(matches!(
            gorenstein_compose(&seq(&[1, 3]), &seq(&[2]), &b),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn idp_examples() {
        let b = Budget::default();
        for (s, t, c) in [
            (vec![2, 3], vec![2], vec![2, 3, 1, 2]),
            (vec![1], vec![1], vec![1, 1, 1]),
            (vec![2], vec![2], vec![2, 1, 2]),
        ] {
            let r = idp_compose(&seq(&s), &seq(&t), None, &b).unwrap();
            assert_eq!(r.composite, seq(&c));
            assert!(r.report.verdict);
        }
    }

    #[test]
    fn span_and_product() {
        let b = Budget::default();
        assert!(lattice_span_is_full(&seq(&[1, 3, 2])).unwrap());
        assert!(delta_product_holds(&seq(&[3, 1]), &seq(&[2, 3]), &b).unwrap());
    }
}
