//! Fano, reflexive and Gorenstein classification.
//!
//! Two independent routes are evaluated side by side:
//!
//! * closed-form conditions for three sequence classes (strictly increasing,
//!   constant then strictly increasing, increasing by at most one), applied
//!   to `s` or to `reverse(s)`;
//! * the δ-vector criteria: Fano iff `δ_d = 1`, reflexive (up to unimodular
//!   equivalence) iff δ is symmetric of degree `d`, Gorenstein of index `c`
//!   iff δ is symmetric of degree `d - c + 1`.
//!
//! Whenever both routes produce a verdict they must agree; a disagreement is
//! reported as [`Error::Inconsistency`].

use serde::Serialize;

use crate::budget::Budget;
use crate::delta::{self, DeltaVector};
use crate::error::{Error, Result};
use crate::hall::{self, HalfSpace, SSequence};
use crate::oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum ClassTag {
    StrictlyIncreasing,
    /// `s_1 = ... = s_prefix`, strictly increasing from `prefix` on.
    ConstantThenStrict { prefix: usize },
    /// `0 <= s_{i+1} - s_i <= 1`.
    IncrementAtMostOne,
    WeaklyMonotone,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequenceClass {
    #[serde(flatten)]
    pub tag: ClassTag,
    /// The tag describes `reverse(s)` rather than `s`.
    pub reversed: bool,
}

impl ClassTag {
    fn has_theorems(&self) -> bool {
        matches!(
            self,
            ClassTag::StrictlyIncreasing
                | ClassTag::ConstantThenStrict { .. }
                | ClassTag::IncrementAtMostOne
        )
    }
}

fn forward_tags(s: &[i64]) -> Vec<ClassTag> {
    let mut tags = Vec::new();
    let strict_from = |i: usize| s[i..].windows(2).all(|w| w[0] < w[1]);
    if strict_from(0) {
        tags.push(ClassTag::StrictlyIncreasing);
    }
    let prefix = s.iter().take_while(|&&x| x == s[0]).count();
    if strict_from(prefix - 1) {
        tags.push(ClassTag::ConstantThenStrict { prefix });
    }
    if s.windows(2).all(|w| (0..=1).contains(&(w[1] - w[0]))) {
        tags.push(ClassTag::IncrementAtMostOne);
    }
    if s.windows(2).all(|w| w[0] <= w[1]) {
        tags.push(ClassTag::WeaklyMonotone);
    }
    tags
}

/// Every class tag that applies to `s` or to `reverse(s)`, most specific
/// first. `General` only when nothing else applies.
pub fn sequence_class(s: &SSequence) -> Vec<SequenceClass> {
    let mut out: Vec<SequenceClass> = forward_tags(s.as_slice())
        .into_iter()
        .map(|tag| SequenceClass { tag, reversed: false })
        .collect();
    let rev = s.reverse();
    if rev != *s {
        out.extend(
            forward_tags(rev.as_slice())
                .into_iter()
                .map(|tag| SequenceClass { tag, reversed: true }),
        );
    }
    if out.is_empty() {
        out.push(SequenceClass {
            tag: ClassTag::General,
            reversed: false,
        });
    }
    out
}

/// The sequence a class tag talks about.
fn oriented(s: &SSequence, class: &SequenceClass) -> SSequence {
    if class.reversed {
        s.reverse()
    } else {
        s.clone()
    }
}

fn fano_condition(tag: ClassTag, o: &[i64]) -> Option<bool> {
    let d = o.len();
    let doubling_from = |i: usize| o[i..].windows(2).all(|w| w[1] <= 2 * w[0]);
    match tag {
        ClassTag::StrictlyIncreasing => Some(o[0] == 2 && doubling_from(0)),
        ClassTag::ConstantThenStrict { prefix } => {
            Some(o[0] == prefix as i64 + 1 && doubling_from(prefix - 1))
        }
        ClassTag::IncrementAtMostOne => Some(o[d - 1] == d as i64 + 1),
        _ => None,
    }
}

fn interior_formula(tag: ClassTag, o: &[i64]) -> Option<Vec<i64>> {
    let d = o.len();
    match tag {
        ClassTag::StrictlyIncreasing => Some(o.iter().map(|x| x - 1).collect()),
        ClassTag::ConstantThenStrict { prefix } => Some(
            (0..d)
                .map(|i| if i < prefix { i as i64 + 1 } else { o[i] - 1 })
                .collect(),
        ),
        ClassTag::IncrementAtMostOne => Some((1..=d as i64).collect()),
        _ => None,
    }
}

/// The class-specific `k_i` for `1 <= i < d` (0-based `i - 1` in the output),
/// `None` at indices the class condition does not constrain.
fn divisors(tag: ClassTag, o: &[i64]) -> Vec<Option<i64>> {
    let d = o.len();
    (1..d)
        .map(|i| {
            let (si, snext) = (o[i - 1], o[i]);
            match tag {
                ClassTag::StrictlyIncreasing => Some(snext - si),
                ClassTag::ConstantThenStrict { prefix } if i >= prefix => Some(snext - si),
                ClassTag::IncrementAtMostOne => Some((i as i64 + 1) * si - i as i64 * snext),
                _ => None,
            }
        })
        .collect()
}

fn reflexive_condition(tag: ClassTag, o: &[i64]) -> Option<bool> {
    if !tag.has_theorems() {
        return None;
    }
    Some(
        divisors(tag, o)
            .iter()
            .enumerate()
            .filter_map(|(idx, k)| k.map(|k| (idx, k)))
            .all(|(idx, k)| k > 0 && o[idx] % k == 0 && o[idx + 1] % k == 0),
    )
}

/// H-representation of `P - p` (with `p` the interior point) in the forms
/// the class theorems use, for an increasing oriented sequence.
fn translated_rows(tag: ClassTag, o: &[i64]) -> Vec<HalfSpace> {
    let d = o.len();
    let unit = |i: usize, v: i64| {
        let mut a = vec![0; d];
        a[i] = v;
        a
    };
    let mut rows = vec![HalfSpace::new(unit(d - 1, 1), 1)];
    let chain_row = |i: usize, b: i64| {
        // s_{i+1} x_i - s_i x_{i+1} <= b, 1-based i
        let mut a = vec![0; d];
        a[i - 1] = o[i];
        a[i] = -o[i - 1];
        HalfSpace::new(a, b)
    };
    match tag {
        ClassTag::StrictlyIncreasing => {
            for i in 1..d {
                rows.push(chain_row(i, o[i] - o[i - 1]));
            }
        }
        ClassTag::ConstantThenStrict { prefix } => {
            for j in 2..=prefix {
                let mut a = vec![0; d];
                a[j - 2] = 1;
                a[j - 1] = -1;
                rows.push(HalfSpace::new(a, 1));
            }
            for j in prefix.max(1)..d {
                rows.push(chain_row(j, o[j] - o[j - 1]));
            }
        }
        ClassTag::IncrementAtMostOne => {
            for i in 1..d {
                let k = (i as i64 + 1) * o[i - 1] - i as i64 * o[i];
                rows.push(chain_row(i, k));
            }
        }
        _ => unreachable!("no translated H-representation for {tag:?}"),
    }
    rows.push(HalfSpace::new(unit(0, -1), 1));
    rows
}

/// Maps a row `a . w <= b` on `P^(reverse s) - q` to the corresponding row on
/// `P^(s) - p` under the reflection `x'_i = -w'_{d+1-i}`.
fn reflect_row(h: &HalfSpace) -> HalfSpace {
    HalfSpace::new(h.a.iter().rev().map(|&a| -a).collect(), h.b)
}

fn interior_in_frame(s: &SSequence, class: &SequenceClass) -> Option<Vec<i64>> {
    let o = oriented(s, class);
    let p = interior_formula(class.tag, o.as_slice())?;
    Some(if class.reversed {
        hall::reflect_point(&o, 1, &p)
    } else {
        p
    })
}

/// The applicable classes whose Fano condition holds.
fn fano_classes(s: &SSequence) -> Vec<SequenceClass> {
    sequence_class(s)
        .into_iter()
        .filter(|c| fano_condition(c.tag, oriented(s, c).as_slice()) == Some(true))
        .collect()
}

/// Translated H-representation of a Fano `P^(s)` in one of the three
/// characterized classes, with the interior point moved to the origin.
///
/// Every translated vertex is checked to satisfy all rows with at least `d`
/// of them tight, and every row must have a positive right-hand side.
pub fn translated_hrep(s: &SSequence) -> Result<Vec<HalfSpace>> {
    let class = *fano_classes(s).first().ok_or_else(|| {
        Error::Unsupported(format!(
            "{s} is not Fano in a characterized sequence class"
        ))
    })?;
    let o = oriented(s, &class);
    let rows = translated_rows(class.tag, o.as_slice());
    let rows: Vec<HalfSpace> = if class.reversed {
        rows.iter().map(reflect_row).collect()
    } else {
        rows
    };
    let p = interior_in_frame(s, &class).expect("class has an interior formula");
    let d = s.dim();
    for (v_idx, v) in hall::vertices(s).vertices.iter().enumerate() {
        let shifted: Vec<i64> = v.iter().zip(&p).map(|(a, b)| a - b).collect();
        let mut tight = 0;
        for h in &rows {
            if !h.satisfied_by(&shifted) {
                return Err(Error::Inconsistency(format!(
                    "translated vertex {v_idx} of {s} violates {h:?}"
                )));
            }
            tight += usize::from(h.tight_at(&shifted));
        }
        if tight < d {
            return Err(Error::Inconsistency(format!(
                "translated vertex {v_idx} of {s} is tight on only {tight} rows"
            )));
        }
    }
    if let Some(h) = rows.iter().find(|h| h.b <= 0) {
        return Err(Error::Inconsistency(format!(
            "origin not strictly inside translated {s}: {h:?}"
        )));
    }
    Ok(rows)
}

/// For `a . x <= b` with `b > 0`: the dual vertex `a / b` is integral for
/// every row.
pub fn dual_is_lattice(hs: &[HalfSpace]) -> Result<bool> {
    if let Some((index, h)) = hs.iter().enumerate().find(|(_, h)| h.b <= 0) {
        return Err(Error::OriginNotInterior { index, b: h.b });
    }
    Ok(hs.iter().all(|h| h.a.iter().all(|&a| a % h.b == 0)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanoVerdict {
    pub fano_theorem: Option<bool>,
    pub fano_delta: bool,
    pub interior_point: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflexiveVerdict {
    pub reflexive_theorem: Option<bool>,
    pub reflexive_reason: Option<String>,
    pub dual_is_lattice: Option<bool>,
    pub reflexive_delta: bool,
}

/// Flat summary of every verdict for one sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub s: SSequence,
    pub classes: Vec<SequenceClass>,
    pub fano: bool,
    pub fano_theorem: Option<bool>,
    pub fano_delta: bool,
    pub interior_point: Option<Vec<i64>>,
    pub reflexive: bool,
    pub reflexive_theorem: Option<bool>,
    pub reflexive_reason: Option<String>,
    pub dual_is_lattice: Option<bool>,
    pub reflexive_delta: bool,
    pub gorenstein_index: Option<u32>,
}

fn agree<T: PartialEq + std::fmt::Debug>(
    s: &SSequence,
    what: &str,
    verdicts: impl IntoIterator<Item = (SequenceClass, T)>,
) -> Result<Option<T>> {
    let mut out: Option<(SequenceClass, T)> = None;
    for (class, v) in verdicts {
        match &out {
            None => out = Some((class, v)),
            Some((first, w)) if *w != v => {
                return Err(Error::Inconsistency(format!(
                    "{what} for {s}: {first:?} gives {w:?} but {class:?} gives {v:?}"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(out.map(|(_, v)| v))
}

fn unique_interior_point(s: &SSequence, budget: &Budget) -> Result<Vec<i64>> {
    budget.check(oracle::count_cost(s, 1))?;
    let inner: Vec<Vec<i64>> = hall::lattice_points(s, 1)
        .into_iter()
        .filter(|p| hall::contains_unchecked(s.as_slice(), 1, p, true))
        .collect();
    match inner.as_slice() {
        [p] => Ok(p.clone()),
        _ => Err(Error::Inconsistency(format!(
            "{s} has δ_d = 1 but {} interior lattice points",
            inner.len()
        ))),
    }
}

fn fano_with(s: &SSequence, delta: &DeltaVector, budget: &Budget) -> Result<FanoVerdict> {
    let classes: Vec<SequenceClass> = sequence_class(s)
        .into_iter()
        .filter(|c| c.tag.has_theorems())
        .collect();
    let fano_delta = delta.get(s.dim()) == 1;
    let fano_theorem = agree(
        s,
        "Fano condition",
        classes
            .iter()
            .map(|c| (*c, fano_condition(c.tag, oriented(s, c).as_slice()).unwrap())),
    )?;
    if let Some(t) = fano_theorem {
        if t != fano_delta {
            return Err(Error::Inconsistency(format!(
                "Fano theorem says {t} for {s} but δ_d = {}",
                delta.get(s.dim())
            )));
        }
    }
    let interior_point = if !fano_delta {
        None
    } else if classes.is_empty() {
        Some(unique_interior_point(s, budget)?)
    } else {
        let p = agree(
            s,
            "interior point",
            classes
                .iter()
                .map(|c| (*c, interior_in_frame(s, c).unwrap())),
        )?
        .unwrap();
        if !hall::contains(s, 1, &p, true)? {
            return Err(Error::Inconsistency(format!(
                "interior point formula {p:?} is not interior to {s}"
            )));
        }
        Some(p)
    };
    Ok(FanoVerdict {
        fano_theorem,
        fano_delta,
        interior_point,
    })
}

fn reflexive_with(s: &SSequence, delta: &DeltaVector, fano: &FanoVerdict) -> Result<ReflexiveVerdict> {
    let classes: Vec<SequenceClass> = sequence_class(s)
        .into_iter()
        .filter(|c| c.tag.has_theorems())
        .collect();
    let reflexive_delta = delta.is_reflexive();
    let mut verdict = ReflexiveVerdict {
        reflexive_theorem: None,
        reflexive_reason: None,
        dual_is_lattice: None,
        reflexive_delta,
    };
    if classes.is_empty() {
        return Ok(verdict);
    }
    if fano.fano_theorem != Some(true) {
        verdict.reflexive_theorem = Some(false);
        verdict.reflexive_reason = Some("not Fano".into());
        return Ok(verdict);
    }
    let theorem = agree(
        s,
        "reflexive condition",
        classes
            .iter()
            .map(|c| (*c, reflexive_condition(c.tag, oriented(s, c).as_slice()).unwrap())),
    )?
    .unwrap();
    let dual = dual_is_lattice(&translated_hrep(s)?)?;
    if dual != theorem {
        return Err(Error::Inconsistency(format!(
            "divisibility condition says {theorem} for {s} but dual lattice check says {dual}"
        )));
    }
    if theorem != reflexive_delta {
        return Err(Error::Inconsistency(format!(
            "reflexive theorem says {theorem} for {s} but δ = {:?}",
            delta.as_slice()
        )));
    }
    verdict.reflexive_theorem = Some(theorem);
    verdict.reflexive_reason = Some(if theorem {
        "divisibility holds".into()
    } else {
        "divisibility fails".into()
    });
    verdict.dual_is_lattice = Some(dual);
    Ok(verdict)
}

pub fn fano(s: &SSequence, budget: &Budget) -> Result<FanoVerdict> {
    let delta = delta::delta_vector_within(s, budget)?;
    fano_with(s, &delta, budget)
}

pub fn reflexive(s: &SSequence, budget: &Budget) -> Result<ReflexiveVerdict> {
    let delta = delta::delta_vector_within(s, budget)?;
    let f = fano_with(s, &delta, budget)?;
    reflexive_with(s, &delta, &f)
}

fn gorenstein_with(s: &SSequence, delta: &DeltaVector, budget: &Budget) -> Result<Option<u32>> {
    if !delta.is_symmetric() {
        return Ok(None);
    }
    let c = s.dim() - delta.degree() + 1;
    let dilated = s.dilate(c as i64)?;
    let dd = delta::delta_vector_within(&dilated, budget)?;
    if !dd.is_reflexive() {
        return Err(Error::Inconsistency(format!(
            "δ of {s} is symmetric of degree {} but {c}P = P^({dilated}) has δ = {:?}",
            delta.degree(),
            dd.as_slice()
        )));
    }
    Ok(Some(c as u32))
}

/// `c = d - deg δ + 1` when δ is symmetric, confirmed by checking that
/// `cP = P^(cs)` has symmetric δ of full degree.
pub fn gorenstein_index(s: &SSequence, budget: &Budget) -> Result<Option<u32>> {
    let delta = delta::delta_vector_within(s, budget)?;
    gorenstein_with(s, &delta, budget)
}

pub fn classify_with(s: &SSequence, delta: &DeltaVector, budget: &Budget) -> Result<Classification> {
    let f = fano_with(s, delta, budget)?;
    let r = reflexive_with(s, delta, &f)?;
    let gorenstein_index = gorenstein_with(s, delta, budget)?;
    Ok(Classification {
        s: s.clone(),
        classes: sequence_class(s),
        fano: f.fano_delta,
        fano_theorem: f.fano_theorem,
        fano_delta: f.fano_delta,
        interior_point: f.interior_point,
        reflexive: r.reflexive_delta,
        reflexive_theorem: r.reflexive_theorem,
        reflexive_reason: r.reflexive_reason,
        dual_is_lattice: r.dual_is_lattice,
        reflexive_delta: r.reflexive_delta,
        gorenstein_index,
    })
}

pub fn classify(s: &SSequence, budget: &Budget) -> Result<Classification> {
    let delta = delta::delta_vector_within(s, budget)?;
    classify_with(s, &delta, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> SSequence {
        SSequence::new(v.to_vec()).unwrap()
    }

    fn tags(v: &[i64]) -> Vec<(ClassTag, bool)> {
        sequence_class(&seq(v))
            .into_iter()
            .map(|c| (c.tag, c.reversed))
            .collect()
    }

    #[test]
    fn class_detection() {
        let t = tags(&[2, 3, 4]);
        assert_eq!(t[0], (ClassTag::StrictlyIncreasing, false));
        assert!(t.contains(&(ClassTag::IncrementAtMostOne, false)));
        assert!(t.contains(&(ClassTag::ConstantThenStrict { prefix: 1 }, false)));

        let t = tags(&[3, 3, 4]);
        assert_eq!(t[0], (ClassTag::ConstantThenStrict { prefix: 2 }, false));
        assert!(!t.contains(&(ClassTag::StrictlyIncreasing, false)));

        let t = tags(&[3, 4, 4, 5]);
        assert_eq!(t[0], (ClassTag::IncrementAtMostOne, false));

        let t = tags(&[4, 3, 2]);
        assert!(t.iter().all(|&(_, r)| r));
        assert_eq!(t[0], (ClassTag::StrictlyIncreasing, true));

        assert_eq!(tags(&[2, 5, 3]), vec![(ClassTag::General, false)]);
    }

    #[test]
    fn fano_examples() {
        let b = Budget::default();
        let f = fano(&seq(&[2, 3, 4]), &b).unwrap();
        assert_eq!(f.fano_theorem, Some(true));
        assert!(f.fano_delta);
        assert_eq!(f.interior_point, Some(vec![1, 2, 3]));

        for s in [vec![3, 4, 5], vec![2, 5]] {
            let f = fano(&seq(&s), &b).unwrap();
            assert_eq!(f.fano_theorem, Some(false));
            assert!(!f.fano_delta);
            assert_eq!(f.interior_point, None);
        }

        let f = fano(&seq(&[3, 3, 4]), &b).unwrap();
        assert_eq!(f.interior_point, Some(vec![1, 2, 3]));
        let f = fano(&seq(&[3, 4, 4, 5]), &b).unwrap();
        assert_eq!(f.fano_theorem, Some(true));
        assert_eq!(f.interior_point, Some(vec![1, 2, 3, 4]));
    }

    #[test]
    fn fano_on_decreasing_sequence_uses_reflection() {
        let f = fano(&seq(&[4, 3, 2]), &Budget::default()).unwrap();
        assert_eq!(f.fano_theorem, Some(true));
        assert_eq!(f.interior_point, Some(vec![1, 1, 1]));
    }

    #[test]
    fn fano_without_theorem_finds_point_by_search() {
        // (2,5,3) is not monotone; δ decides
        let s = seq(&[2, 5, 3]);
        let f = fano(&s, &Budget::default()).unwrap();
        assert_eq!(f.fano_theorem, None);
        assert_eq!(f.fano_delta, delta::delta_vector(&s).get(3) == 1);
    }

    #[test]
    fn reflexive_examples() {
        let b = Budget::default();
        let r = reflexive(&seq(&[2, 3, 4]), &b).unwrap();
        assert_eq!(r.reflexive_theorem, Some(true));
        assert!(r.reflexive_delta);
        let r = reflexive(&seq(&[2, 4, 8]), &b).unwrap();
        assert_eq!(r.reflexive_theorem, Some(true));
        assert_eq!(r.dual_is_lattice, Some(true));
        let r = reflexive(&seq(&[3, 4, 4, 5]), &b).unwrap();
        assert_eq!(r.reflexive_theorem, Some(false));
        assert!(!r.reflexive_delta);
        let r = reflexive(&seq(&[3, 4, 5]), &b).unwrap();
        assert_eq!(r.reflexive_theorem, Some(false));
        assert_eq!(r.reflexive_reason.as_deref(), Some("not Fano"));
    }

    #[test]
    fn gorenstein_examples() {
        let b = Budget::default();
        assert_eq!(gorenstein_index(&seq(&[2, 3, 4]), &b).unwrap(), Some(1));
        assert_eq!(gorenstein_index(&seq(&[1, 2, 4]), &b).unwrap(), Some(2));
        assert_eq!(delta::delta_vector(&seq(&[1, 2, 4])).0, vec![1, 6, 1, 0]);
        // the unit simplex needs c = d + 1: P^(4,4,4) is reflexive
        assert_eq!(gorenstein_index(&seq(&[1, 1, 1]), &b).unwrap(), Some(4));
        assert!(delta::delta_vector(&seq(&[4, 4, 4])).is_reflexive());
        assert_eq!(gorenstein_index(&seq(&[1, 3]), &b).unwrap(), None);
    }

    #[test]
    fn translated_hrep_examples() {
        let rows = translated_hrep(&seq(&[2, 3])).unwrap();
        let expected = vec![
            HalfSpace::new(vec![0, 1], 1),
            HalfSpace::new(vec![3, -2], 1),
            HalfSpace::new(vec![-1, 0], 1),
        ];
        assert_eq!(rows, expected);

        let rows = translated_hrep(&seq(&[3, 3, 4])).unwrap();
        assert!(rows.contains(&HalfSpace::new(vec![1, -1, 0], 1)));
        assert_eq!(rows.len(), 4);

        let rows = translated_hrep(&seq(&[2, 3, 4, 5])).unwrap();
        assert!(rows.iter().all(|h| h.b == 1));

        assert!(matches!(
            translated_hrep(&seq(&[3, 4, 5])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn translated_hrep_matches_generic_translation() {
        // each class-form row is a positive multiple of the translated
        // defining inequality
        for s in [vec![2, 3, 5], vec![4, 4, 4, 5], vec![3, 4, 4, 5], vec![5, 3, 2], vec![4, 4, 3]] {
            let s = seq(&s);
            let rows = translated_hrep(&s).unwrap();
            let p = fano(&s, &Budget::default()).unwrap().interior_point.unwrap();
            let generic: Vec<HalfSpace> = hall::hrep(&s, 1)
                .unwrap()
                .into_iter()
                .map(|h| {
                    let shift: i64 = h.a.iter().zip(&p).map(|(a, x)| a * x).sum();
                    HalfSpace::new(h.a.clone(), h.b - shift)
                })
                .collect();
            for r in &rows {
                assert!(
                    generic.iter().any(|g| {
                        (0..r.a.len()).all(|i| r.a[i] * g.b == g.a[i] * r.b) && g.b > 0
                    }),
                    "{r:?} is not a scaled defining row of {s}"
                );
            }
        }
    }

    #[test]
    fn dual_lattice_examples() {
        let rows = vec![
            HalfSpace::new(vec![0, 1], 1),
            HalfSpace::new(vec![3, -2], 1),
            HalfSpace::new(vec![-1, 0], 1),
        ];
        assert!(dual_is_lattice(&rows).unwrap());
        assert!(!dual_is_lattice(&[HalfSpace::new(vec![2, -1], 2)]).unwrap());
        assert!(dual_is_lattice(&[HalfSpace::new(vec![-1], 1), HalfSpace::new(vec![1], 1)]).unwrap());
        assert_eq!(
            dual_is_lattice(&[HalfSpace::new(vec![1], 1), HalfSpace::new(vec![-1], 0)]),
            Err(Error::OriginNotInterior { index: 1, b: 0 })
        );
    }

    #[test]
    fn classification_json_is_flat() {
        let c = classify(&seq(&[2, 3, 4]), &Budget::default()).unwrap();
        assert!(c.fano && c.reflexive);
        assert_eq!(c.gorenstein_index, Some(1));
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["fano"], true);
        assert_eq!(json["interior_point"], serde_json::json!([1, 2, 3]));
        let c = classify(&seq(&[2, 5, 3]), &Budget::default()).unwrap();
        let json = serde_json::to_value(&c).unwrap();
        assert!(json["fano_theorem"].is_null());
    }
}
