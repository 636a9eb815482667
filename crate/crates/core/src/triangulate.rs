//! Unimodular triangulations of `P^(s)` when every ratio `s_{i+1} / s_i` is
//! a positive integer `k_i`, and a verifier for arbitrary triangulations.
//!
//! `P^(s_1..s_d)` is the chimney over `P' = P^(s_1..s_{d-1})` between the
//! graphs of `l(v) = k_{d-1} v_{d-1}` and the constant `s_d`. Each cell of a
//! triangulation of `P'` is lifted by a staircase: column `i` climbs from
//! `l(v_i)` to `s_d` one unit at a time, raises ordered globally by
//! `j / h_i` (ties by the base vertex), and every raise emits one simplex.
//! Since the order only depends on the column itself, adjacent cells agree
//! on their common wall.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hall::{self, SSequence};
use crate::lattice::{self, cmp_ratio, IntMatrix};

/// `d + 1` lattice points in dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Simplex(pub Vec<Vec<i64>>);

impl Simplex {
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub ambient: SSequence,
    pub simplices: Vec<Simplex>,
}

/// Serialized as the bare list of simplices.
impl Serialize for Triangulation {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.simplices.serialize(ser)
    }
}

/// `k_i = s_{i+1} / s_i` when all of them are integers.
pub fn ratio_factors(s: &[i64]) -> Option<Vec<i64>> {
    s.windows(2)
        .map(|w| (w[1] % w[0] == 0).then(|| w[1] / w[0]))
        .collect()
}

/// Whether [`chimney_triangulation`] accepts `s`: integer ratios read
/// forwards or backwards.
pub fn is_supported(s: &SSequence) -> bool {
    ratio_factors(s.as_slice()).is_some() || ratio_factors(s.reverse().as_slice()).is_some()
}

/// Number of simplices produced, `prod s_i`.
pub fn triangulation_cost(s: &SSequence) -> u128 {
    s.product()
}

pub fn chimney_triangulation(s: &SSequence) -> Result<Triangulation> {
    let simplices = if let Some(k) = ratio_factors(s.as_slice()) {
        build(s.as_slice(), &k)
    } else if let Some(k) = ratio_factors(s.reverse().as_slice()) {
        let r = s.reverse();
        build(r.as_slice(), &k)
            .into_par_iter()
            .map(|cell| cell.iter().map(|v| hall::reflect_point(&r, 1, v)).collect())
            .collect()
    } else {
        return Err(Error::Unsupported(format!(
            "no integer ratios s_(i+1)/s_i in either direction for {s}"
        )));
    };
    let bad = simplices
        .par_iter()
        .position_first(|c: &Vec<Vec<i64>>| !matches!(lattice::simplex_is_unimodular(c), Ok(true)));
    if let Some(i) = bad {
        return Err(Error::Inconsistency(format!(
            "chimney simplex {:?} of {s} is not unimodular",
            simplices[i]
        )));
    }
    Ok(Triangulation {
        ambient: s.clone(),
        simplices: simplices.into_iter().map(Simplex).collect(),
    })
}

fn build(s: &[i64], k: &[i64]) -> Vec<Vec<Vec<i64>>> {
    let mut cells: Vec<Vec<Vec<i64>>> = (1..=s[0]).map(|j| vec![vec![j - 1], vec![j]]).collect();
    for m in 1..s.len() {
        cells = cells
            .par_iter()
            .map(|cell| lift_cell(cell, k[m - 1], s[m]))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
    }
    cells
}

/// Staircase triangulation of the chimney over one cell.
fn lift_cell(cell: &[Vec<i64>], k: i64, u: i64) -> Vec<Vec<Vec<i64>>> {
    let last = cell[0].len() - 1;
    let floor: Vec<i64> = cell.iter().map(|v| k * v[last]).collect();
    let height: Vec<i64> = floor.iter().map(|f| u - f).collect();
    let mut raises: Vec<(i64, usize)> = height
        .iter()
        .enumerate()
        .flat_map(|(col, &h)| (1..=h).map(move |j| (j, col)))
        .collect();
    raises.sort_by(|&(ja, a), &(jb, b)| match cmp_ratio(ja, height[a], jb, height[b]) {
        Ordering::Equal => cell[a].cmp(&cell[b]),
        other => other,
    });
    let lifted = |col: usize, level: i64| {
        let mut p = cell[col].clone();
        p.push(floor[col] + level);
        p
    };
    let mut level = vec![0i64; cell.len()];
    let mut out = Vec::with_capacity(raises.len());
    for (j, col) in raises {
        let mut simplex: Vec<Vec<i64>> = (0..cell.len()).map(|i| lifted(i, level[i])).collect();
        simplex.push(lifted(col, j));
        level[col] = j;
        out.push(simplex);
    }
    out
}

/// Outcome of [`verify_triangulation`]; `failures` lists the first few
/// offending simplices or samples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub simplices: usize,
    pub expected_simplices: u128,
    pub unimodular: bool,
    pub count_matches: bool,
    pub contained: bool,
    pub samples: usize,
    pub samples_covered: bool,
    pub interior_unique: bool,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.unimodular
            && self.count_matches
            && self.contained
            && self.samples_covered
            && self.interior_unique
    }
}

const MAX_FAILURES: usize = 20;

/// Barycentric test data for one simplex: a point `q / den` has
/// coordinates `w / (den * det)` with `w = adj(M) (q - den v_0)`.
struct Locator {
    origin: Vec<i128>,
    adj: Vec<Vec<i128>>,
    det: i128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Location {
    Outside,
    Boundary,
    Interior,
}

impl Locator {
    fn new(simplex: &[Vec<i64>]) -> Result<Self> {
        let m = lattice::edge_matrix(simplex)?;
        let det = lattice::determinant(&m)? as i128;
        let adj = if m.nrows() == 0 {
            IntMatrix::identity(0)
        } else {
            lattice::adjugate(&m)?
        };
        Ok(Locator {
            origin: simplex[0].iter().map(|&x| x as i128).collect(),
            adj: adj
                .rows()
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect(),
            det,
        })
    }

    fn locate(&self, q: &[i128], den: i128) -> Location {
        if self.det == 0 {
            return Location::Outside;
        }
        let sign = self.det.signum();
        let total = den * self.det * sign;
        let shifted: Vec<i128> = q.iter().zip(&self.origin).map(|(a, o)| a - den * o).collect();
        let mut sum = 0i128;
        let mut interior = true;
        for row in &self.adj {
            let w = sign * row.iter().zip(&shifted).map(|(a, b)| a * b).sum::<i128>();
            if w < 0 {
                return Location::Outside;
            }
            interior &= w > 0;
            sum += w;
        }
        match sum.cmp(&total) {
            Ordering::Greater => Location::Outside,
            Ordering::Equal => Location::Boundary,
            Ordering::Less if interior => Location::Interior,
            Ordering::Less => Location::Boundary,
        }
    }
}

const WEIGHT_MAX: i128 = 1000;

/// Seeded rational sample points of `P`: half are generic convex
/// combinations of the vertices of `P`, half sit within `1/WEIGHT_MAX` of a
/// facet of some simplex of `T`, where overlaps and gaps between
/// neighbouring cells would show up.
fn sample_points(s: &SSequence, t: &Triangulation, n: usize, seed: u64) -> Vec<(Vec<i128>, i128)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let verts = hall::vertices(s).vertices;
    let d = s.dim();
    let mut out = Vec::with_capacity(n);
    let mut attempts = 0usize;
    while out.len() < n && attempts < 100 * n.max(1) {
        attempts += 1;
        let (q, den) = if out.len() % 2 == 0 || t.simplices.is_empty() {
            combine(&mut rng, &verts, None, d)
        } else {
            let simplex = t.simplices.choose(&mut rng).expect("nonempty");
            let opposite = rng.gen_range(0..simplex.0.len());
            combine(&mut rng, &simplex.0, Some(opposite), d)
        };
        if den > 0 && hall::contains_rational(s, 1, &q, den, false) {
            out.push((q, den));
        }
    }
    out
}

/// Positive weights on `points`; with `opposite = Some(o)` the weight of
/// point `o` is instead one of `-1, 0, 1`.
fn combine(rng: &mut ChaCha8Rng, points: &[Vec<i64>], opposite: Option<usize>, d: usize) -> (Vec<i128>, i128) {
    let mut q = vec![0i128; d];
    let mut den = 0i128;
    for (i, p) in points.iter().enumerate() {
        let w = if Some(i) == opposite {
            rng.gen_range(-1..=1)
        } else {
            rng.gen_range(2..=WEIGHT_MAX)
        };
        den += w;
        q.iter_mut().zip(p).for_each(|(a, &x)| *a += w * x as i128);
    }
    (q, den)
}

/// Checks (a) unimodularity, (b) simplex count `prod s_i`, (c) containment
/// of vertices and barycenters in `P`, and (d) seeded point location:
/// every sample lies in some simplex, and a sample interior to one simplex
/// lies in no other.
pub fn verify_triangulation(s: &SSequence, t: &Triangulation, samples: usize, seed: u64) -> VerificationReport {
    let d = s.dim();
    let mut failures = Vec::new();
    let mut note = |msg: String| {
        if failures.len() < MAX_FAILURES {
            failures.push(msg);
        }
    };
    let mut unimodular = true;
    let mut contained = true;
    let mut locators = Vec::with_capacity(t.simplices.len());
    for simplex in &t.simplices {
        let v = &simplex.0;
        let shape_ok = v.len() == d + 1 && v.iter().all(|p| p.len() == d);
        if !shape_ok {
            unimodular = false;
            contained = false;
            note(format!("malformed simplex {v:?}"));
            continue;
        }
        match Locator::new(v) {
            Ok(loc) if loc.det.abs() == 1 => locators.push(loc),
            Ok(loc) => {
                unimodular = false;
                note(format!("simplex {v:?} has determinant {}", loc.det));
                locators.push(loc);
            }
            Err(e) => {
                unimodular = false;
                note(format!("simplex {v:?}: {e}"));
            }
        }
        let vertices_in = v.iter().all(|p| hall::contains_unchecked(s.as_slice(), 1, p, false));
        let mut bary = vec![0i128; d];
        for p in v {
            bary.iter_mut().zip(p).for_each(|(a, &x)| *a += x as i128);
        }
        if !vertices_in || !hall::contains_rational(s, 1, &bary, d as i128 + 1, false) {
            contained = false;
            note(format!("simplex {v:?} leaves P"));
        }
    }
    let expected = s.product();
    let count_matches = t.simplices.len() as u128 == expected;
    if !count_matches {
        note(format!("{} simplices, expected {expected}", t.simplices.len()));
    }

    let points = sample_points(s, t, samples, seed);
    let located: Vec<(usize, usize)> = points
        .par_iter()
        .map(|(q, den)| {
            locators.iter().fold((0, 0), |(closed, open), loc| match loc.locate(q, *den) {
                Location::Outside => (closed, open),
                Location::Boundary => (closed + 1, open),
                Location::Interior => (closed + 1, open + 1),
            })
        })
        .collect();
    let mut samples_covered = points.len() == samples;
    if !samples_covered {
        note(format!("only {} of {samples} samples drawn", points.len()));
    }
    let mut interior_unique = true;
    for ((q, den), &(closed, open)) in points.iter().zip(&located) {
        if closed == 0 {
            samples_covered = false;
            note(format!("sample {q:?}/{den} is in no simplex"));
        }
        if open > 0 && closed != 1 {
            interior_unique = false;
            note(format!("interior sample {q:?}/{den} lies in {closed} simplices"));
        }
    }
    VerificationReport {
        simplices: t.simplices.len(),
        expected_simplices: expected,
        unimodular,
        count_matches,
        contained,
        samples: points.len(),
        samples_covered,
        interior_unique,
        failures,
    }
}
