//! s-sequences and the lecture hall polytope
//! `P = { x : 0 <= x_1/s_1 <= x_2/s_2 <= ... <= x_d/s_d <= 1 }`.
//!
//! Points are always indexed `(x_1, ..., x_d)` ascending. Displays that put
//! `x_d` in the first row are re-indexed at the boundary.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Rational;

/// A sequence of positive integers `(s_1, ..., s_d)`, `d >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SSequence(Vec<i64>);

impl SSequence {
    pub fn new(s: Vec<i64>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidSequence("sequence must be nonempty".into()));
        }
        if let Some(bad) = s.iter().find(|&&x| x < 1) {
            return Err(Error::InvalidSequence(format!(
                "entries must be positive, found {bad}"
            )));
        }
        Ok(SSequence(s))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// `s_i` with 1-based index.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn product(&self) -> u128 {
        self.0.iter().map(|&x| x as u128).product()
    }

    /// `(s_d, ..., s_1)`; `P^(s)` and `P^(reverse s)` are unimodularly equivalent.
    pub fn reverse(&self) -> SSequence {
        SSequence(self.0.iter().rev().copied().collect())
    }

    /// `(r s_1, ..., r s_d)`, so that `r P^(s) = P^(r s)`.
    pub fn dilate(&self, r: i64) -> Result<SSequence> {
        if r < 1 {
            return Err(Error::Precondition(format!(
                "dilation factor must be positive, got {r}"
            )));
        }
        let s = self
            .0
            .iter()
            .map(|&x| x.checked_mul(r).ok_or(Error::Overflow("dilation")))
            .collect::<Result<Vec<_>>>()?;
        Ok(SSequence(s))
    }

    /// `(s, t)`: concatenation.
    pub fn concat(&self, other: &SSequence) -> SSequence {
        let mut s = self.0.clone();
        s.extend_from_slice(&other.0);
        SSequence(s)
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_monotone(&self) -> bool {
        self.is_weakly_increasing() || self.is_weakly_decreasing()
    }
}

impl TryFrom<Vec<i64>> for SSequence {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        SSequence::new(v)
    }
}

impl From<SSequence> for Vec<i64> {
    fn from(s: SSequence) -> Vec<i64> {
        s.0
    }
}

impl FromStr for SSequence {
    type Err = Error;

    /// Parses `"2,3,4"`.
    fn from_str(raw: &str) -> Result<Self> {
        SSequence::new(parse_int_list(raw)?)
    }
}

impl fmt::Display for SSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses a comma-separated list of integers such as `"1,-2,3"`.
pub fn parse_int_list(raw: &str) -> Result<Vec<i64>> {
    raw.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
        })
        .collect()
}

/// Integer inequality `a . x <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpace {
    pub a: Vec<i64>,
    pub b: i64,
}

impl HalfSpace {
    pub fn new(a: Vec<i64>, b: i64) -> Self {
        debug_assert!(a.iter().any(|&x| x != 0), "half-space normal must be nonzero");
        HalfSpace { a, b }
    }

    /// `a . x` evaluated in i128.
    pub fn eval(&self, x: &[i64]) -> i128 {
        self.a
            .iter()
            .zip(x)
            .map(|(&a, &x)| a as i128 * x as i128)
            .sum()
    }

    pub fn satisfied_by(&self, x: &[i64]) -> bool {
        self.eval(x) <= self.b as i128
    }

    pub fn strictly_satisfied_by(&self, x: &[i64]) -> bool {
        self.eval(x) < self.b as i128
    }

    pub fn tight_at(&self, x: &[i64]) -> bool {
        self.eval(x) == self.b as i128
    }
}

/// Vertex representation of a lattice polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeVRep {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

impl PolytopeVRep {
    pub fn new(dim: usize, vertices: Vec<Vec<i64>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Precondition("polytope needs at least one vertex".into()));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != dim) {
            return Err(Error::Dimension {
                expected: dim,
                found: v.len(),
            });
        }
        Ok(PolytopeVRep { dim, vertices })
    }

    pub fn contains_origin_vertex(&self) -> bool {
        self.vertices.iter().any(|v| v.iter().all(|&x| x == 0))
    }
}

/// The `d + 1` vertices. Vertex `j` has `x_i = s_i` for `i > d - j`, zero
/// elsewhere: vertex 0 is the origin, vertex `d` is `s` itself.
pub fn vertices(s: &SSequence) -> PolytopeVRep {
    let d = s.dim();
    let verts = (0..=d)
        .map(|j| {
            (1..=d)
                .map(|i| if i > d - j { s.at(i) } else { 0 })
                .collect()
        })
        .collect();
    PolytopeVRep { dim: d, vertices: verts }
}

/// Defining inequalities of `tP`: `-x_1 <= 0`,
/// `s_{i+1} x_i - s_i x_{i+1} <= 0` for `1 <= i < d`, and `x_d <= t s_d`.
pub fn hrep(s: &SSequence, t: i64) -> Result<Vec<HalfSpace>> {
    if t < 1 {
        return Err(Error::Precondition(format!("dilation must be positive, got {t}")));
    }
    let d = s.dim();
    let mut rows = Vec::with_capacity(d + 1);
    let mut bottom = vec![0; d];
    bottom[0] = -1;
    rows.push(HalfSpace::new(bottom, 0));
    for i in 1..d {
        let mut a = vec![0; d];
        a[i - 1] = s.at(i + 1);
        a[i] = -s.at(i);
        rows.push(HalfSpace::new(a, 0));
    }
    let mut top = vec![0; d];
    top[d - 1] = 1;
    let b = t.checked_mul(s.at(d)).ok_or(Error::Overflow("dilated top facet"))?;
    rows.push(HalfSpace::new(top, b));
    Ok(rows)
}

fn check_dim(s: &SSequence, p: &[i64]) -> Result<()> {
    if p.len() != s.dim() {
        return Err(Error::Dimension {
            expected: s.dim(),
            found: p.len(),
        });
    }
    Ok(())
}

/// Membership of `p` in `tP` (strict: in the interior).
pub fn contains(s: &SSequence, t: i64, p: &[i64], strict: bool) -> Result<bool> {
    check_dim(s, p)?;
    Ok(contains_unchecked(s.as_slice(), t, p, strict))
}

/// Same as [`contains`] without the dimension check; `t` may be zero.
#[inline]
pub fn contains_unchecked(s: &[i64], t: i64, p: &[i64], strict: bool) -> bool {
    let d = s.len();
    let ok = |lhs: i128, rhs: i128| if strict { lhs < rhs } else { lhs <= rhs };
    if !ok(0, p[0] as i128) {
        return false;
    }
    for i in 0..d - 1 {
        let lhs = s[i + 1] as i128 * p[i] as i128;
        let rhs = s[i] as i128 * p[i + 1] as i128;
        if !ok(lhs, rhs) {
            return false;
        }
    }
    ok(p[d - 1] as i128, t as i128 * s[d - 1] as i128)
}

/// Membership of the rational point `q / den` (with `den > 0`) in `tP`.
pub fn contains_rational(s: &SSequence, t: i64, q: &[i128], den: i128, strict: bool) -> bool {
    let sv = s.as_slice();
    let d = sv.len();
    let ok = |lhs: i128, rhs: i128| if strict { lhs < rhs } else { lhs <= rhs };
    if !ok(0, q[0]) {
        return false;
    }
    for i in 0..d - 1 {
        if !ok(sv[i + 1] as i128 * q[i], sv[i] as i128 * q[i + 1]) {
            return false;
        }
    }
    ok(q[d - 1], den * t as i128 * sv[d - 1] as i128)
}

/// Same as [`contains_rational`] for an arbitrary-precision point.
pub fn contains_big_rational(s: &SSequence, t: i64, p: &[Rational], strict: bool) -> Result<bool> {
    if p.len() != s.dim() {
        return Err(Error::Dimension {
            expected: s.dim(),
            found: p.len(),
        });
    }
    let zero = Rational::from_integer(BigInt::from(0));
    let ok = |lhs: &Rational, rhs: &Rational| if strict { lhs < rhs } else { lhs <= rhs };
    if !ok(&zero, &p[0]) {
        return Ok(false);
    }
    let sv = s.as_slice();
    for i in 0..sv.len() - 1 {
        let lhs = &p[i] * Rational::from_integer(BigInt::from(sv[i + 1]));
        let rhs = &p[i + 1] * Rational::from_integer(BigInt::from(sv[i]));
        if !ok(&lhs, &rhs) {
            return Ok(false);
        }
    }
    let top = Rational::from_integer(BigInt::from(t) * BigInt::from(sv[sv.len() - 1]));
    Ok(ok(&p[sv.len() - 1], &top))
}

/// Number of lattice points of `tP`, by dynamic programming over the chain
/// bounds. Used for cost estimation; independent of the enumerator.
pub fn count_points_dp(s: &SSequence, t: i64) -> u128 {
    let sv = s.as_slice();
    let d = sv.len();
    // ways[v] = number of (x_1..x_i) given x_i = v
    let top = (t.max(0) as i128 * sv[d - 1] as i128) as usize;
    let mut ways: Vec<u128> = vec![1; (t.max(0) as i128 * sv[0] as i128) as usize + 1];
    for i in 1..d {
        let hi = (t.max(0) as i128 * sv[i] as i128) as usize;
        let mut prefix = Vec::with_capacity(ways.len() + 1);
        prefix.push(0u128);
        for w in &ways {
            let last = *prefix.last().unwrap();
            prefix.push(last.saturating_add(*w));
        }
        let next: Vec<u128> = (0..=hi)
            .map(|v| {
                let bound = (sv[i - 1] as i128 * v as i128 / sv[i] as i128) as usize;
                prefix[bound.min(ways.len() - 1) + 1]
            })
            .collect();
        ways = next;
    }
    ways.iter().take(top + 1).fold(0u128, |a, &w| a.saturating_add(w))
}

/// All lattice points of `tP`, ordered lexicographically on
/// `(x_d, x_{d-1}, ..., x_1)`.
pub fn lattice_points(s: &SSequence, t: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for_each_lattice_point(s, t, |p| out.push(p.to_vec()));
    out
}

/// Visits the lattice points of `tP` in the order of [`lattice_points`]
/// without materializing them.
pub fn for_each_lattice_point<F: FnMut(&[i64])>(s: &SSequence, t: i64, mut f: F) {
    let sv = s.as_slice();
    let d = sv.len();
    if t < 0 {
        return;
    }
    let mut cur = vec![0i64; d];
    descend(sv, d - 1, t * sv[d - 1], &mut cur, &mut f);
}

fn descend<F: FnMut(&[i64])>(s: &[i64], i: usize, upper: i64, cur: &mut Vec<i64>, f: &mut F) {
    for v in 0..=upper {
        cur[i] = v;
        if i == 0 {
            f(cur);
        } else {
            // x_{i-1} <= s_{i-1} x_i / s_i
            let next = (s[i - 1] as i128 * v as i128 / s[i] as i128) as i64;
            descend(s, i - 1, next, cur, f);
        }
    }
}

/// The unimodular equivalence `tP^(s) -> tP^(reverse s)`,
/// `w_j = t s_{d+1-j} - x_{d+1-j}`. Applying it with `reverse(s)` inverts it.
pub fn reflect_point(s: &SSequence, t: i64, x: &[i64]) -> Vec<i64> {
    let sv = s.as_slice();
    let d = sv.len();
    (0..d).map(|j| t * sv[d - 1 - j] - x[d - 1 - j]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> SSequence {
        SSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(SSequence::new(vec![]).is_err());
        assert!(SSequence::new(vec![2, 0, 3]).is_err());
        assert!("2,x".parse::<SSequence>().is_err());
        assert_eq!("2, 3,4".parse::<SSequence>().unwrap(), seq(&[2, 3, 4]));
        assert_eq!(seq(&[2, 3, 4]).to_string(), "2,3,4");
    }

    #[test]
    fn vertex_examples() {
        assert_eq!(vertices(&seq(&[2])).vertices, vec![vec![0], vec![2]]);
        assert_eq!(
            vertices(&seq(&[1, 2])).vertices,
            vec![vec![0, 0], vec![0, 2], vec![1, 2]]
        );
        let v = vertices(&seq(&[2, 3, 4]));
        assert_eq!(
            v.vertices,
            vec![vec![0, 0, 0], vec![0, 0, 4], vec![0, 3, 4], vec![2, 3, 4]]
        );
        for p in &v.vertices {
            assert!(contains(&seq(&[2, 3, 4]), 1, p, false).unwrap());
        }
    }

    #[test]
    fn hrep_examples() {
        assert_eq!(
            hrep(&seq(&[2]), 1).unwrap(),
            vec![HalfSpace::new(vec![-1], 0), HalfSpace::new(vec![1], 2)]
        );
        let expected = vec![
            HalfSpace::new(vec![-1, 0], 0),
            HalfSpace::new(vec![3, -2], 0),
            HalfSpace::new(vec![0, 1], 3),
        ];
        assert_eq!(hrep(&seq(&[2, 3]), 1).unwrap(), expected);
        let dilated = hrep(&seq(&[2, 3]), 2).unwrap();
        assert_eq!(dilated[2], HalfSpace::new(vec![0, 1], 6));
        assert_eq!(dilated[..2], expected[..2]);
        assert!(hrep(&seq(&[2]), 0).is_err());
    }

    #[test]
    fn membership_examples() {
        let s = seq(&[2, 3]);
        assert!(contains(&s, 1, &[1, 2], false).unwrap());
        assert!(contains(&s, 1, &[1, 2], true).unwrap());
        assert!(!contains(&s, 1, &[2, 3], true).unwrap());
        assert!(contains(&s, 1, &[2, 3], false).unwrap());
        assert!(!contains(&s, 1, &[2, 2], false).unwrap());
        assert!(matches!(contains(&s, 1, &[1], false), Err(Error::Dimension { .. })));
    }

    #[test]
    fn membership_agrees_with_hrep() {
        let s = seq(&[3, 1, 4]);
        let rows = hrep(&s, 2).unwrap();
        for x in -1..=7 {
            for y in -1..=3 {
                for z in -1..=9 {
                    let p = [x, y, z];
                    let by_rows = rows.iter().all(|h| h.satisfied_by(&p));
                    assert_eq!(contains(&s, 2, &p, false).unwrap(), by_rows);
                    let strict = rows.iter().all(|h| h.strictly_satisfied_by(&p));
                    assert_eq!(contains(&s, 2, &p, true).unwrap(), strict);
                }
            }
        }
    }

    #[test]
    fn lattice_point_counts() {
        assert_eq!(lattice_points(&seq(&[2, 3]), 1).len(), 7);
        assert_eq!(lattice_points(&seq(&[2, 3]), 2).len(), 19);
        for d in 1..=5 {
            assert_eq!(lattice_points(&seq(&vec![1; d]), 1).len(), d + 1);
        }
        assert_eq!(lattice_points(&seq(&[2, 3]), 0), vec![vec![0, 0]]);
    }

    #[test]
    fn lattice_points_are_ordered_by_reversed_coordinates() {
        let pts = lattice_points(&seq(&[2, 3]), 1);
        assert_eq!(
            pts,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn dp_count_matches_enumeration() {
        for s in [vec![2, 3], vec![3, 1, 4], vec![1, 5, 2, 2], vec![7]] {
            let s = seq(&s);
            for t in 0..4 {
                assert_eq!(count_points_dp(&s, t), lattice_points(&s, t).len() as u128);
            }
        }
    }

    #[test]
    fn reverse_and_dilate() {
        assert_eq!(seq(&[2, 3, 4]).reverse(), seq(&[4, 3, 2]));
        assert_eq!(seq(&[5]).reverse(), seq(&[5]));
        assert_eq!(seq(&[1, 2, 1]).reverse(), seq(&[1, 2, 1]));
        assert_eq!(seq(&[1, 2, 4]).dilate(2).unwrap(), seq(&[2, 4, 8]));
        assert_eq!(seq(&[2, 3]).dilate(3).unwrap(), seq(&[6, 9]));
        assert_eq!(seq(&[4, 1]).dilate(1).unwrap(), seq(&[4, 1]));
        assert!(seq(&[i64::MAX]).dilate(2).is_err());
    }

    #[test]
    fn reflection_maps_onto_reversed_polytope() {
        let s = seq(&[2, 5, 3]);
        let r = s.reverse();
        for t in 1..=2 {
            let mut mapped: Vec<_> = lattice_points(&s, t)
                .iter()
                .map(|p| reflect_point(&s, t, p))
                .collect();
            mapped.sort();
            let mut target = lattice_points(&r, t);
            target.sort();
            assert_eq!(mapped, target);
            for p in lattice_points(&s, t) {
                assert_eq!(reflect_point(&r, t, &reflect_point(&s, t, &p)), p);
            }
        }
    }

    #[test]
    fn rational_membership() {
        let s = seq(&[2, 3]);
        // (1/2, 2/3) lies on the facet 3x_1 - 2x_2 <= 0? 3/2 - 4/3 > 0, outside.
        assert!(!contains_rational(&s, 1, &[3, 4], 6, false));
        assert!(contains_rational(&s, 1, &[3, 5], 6, true));
        let p = vec![crate::lattice::rational(1, 2), crate::lattice::rational(5, 6)];
        assert!(contains_big_rational(&s, 1, &p, true).unwrap());
    }
}
