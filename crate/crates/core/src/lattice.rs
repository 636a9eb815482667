//! Exact integer and rational linear algebra.
//!
//! Everything here is exact: integers are `i64` at rest and widened to
//! `i128` with checked arithmetic inside eliminations, so any overflow
//! surfaces as [`Error::Overflow`] instead of wrapping.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Exact reduced rational with positive denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Compares `a/b` with `c/d` for positive `b`, `d` by cross-multiplication.
#[inline]
pub fn cmp_ratio(a: i64, b: i64, c: i64, d: i64) -> Ordering {
    debug_assert!(b > 0 && d > 0);
    (a as i128 * d as i128).cmp(&(c as i128 * b as i128))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            let width = first.len();
            if let Some(bad) = rows.iter().find(|r| r.len() != width) {
                return Err(Error::Dimension {
                    expected: width,
                    found: bad.len(),
                });
            }
        }
        Ok(IntMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        IntMatrix { rows }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<i64>]) -> Result<Self> {
        let height = cols.first().map_or(0, Vec::len);
        for c in cols {
            if c.len() != height {
                return Err(Error::Dimension {
                    expected: height,
                    found: c.len(),
                });
            }
        }
        let rows = (0..height)
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect();
        Ok(IntMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.ncols())
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        IntMatrix { rows }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::Dimension {
                expected: self.ncols(),
                found: other.nrows(),
            });
        }
        let mut rows = Vec::with_capacity(self.nrows());
        for r in &self.rows {
            let mut out = Vec::with_capacity(other.ncols());
            for j in 0..other.ncols() {
                let mut acc: i64 = 0;
                for (k, &x) in r.iter().enumerate() {
                    acc = x
                        .checked_mul(other.rows[k][j])
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow("matrix product"))?;
                }
                out.push(acc);
            }
            rows.push(out);
        }
        Ok(IntMatrix { rows })
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip_row)
            .map(|(_, r)| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip_col)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        IntMatrix { rows }
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<i64> {
    if !m.is_square() {
        return Err(Error::Dimension {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = m
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i][j].checked_mul(a[k][k]);
                let rhs = a[i][k].checked_mul(a[k][j]);
                let num = lhs
                    .zip(rhs)
                    .and_then(|(l, r)| l.checked_sub(r))
                    .ok_or(Error::Overflow("determinant"))?;
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    let det = if negate { -a[n - 1][n - 1] } else { a[n - 1][n - 1] };
    i64::try_from(det).map_err(|_| Error::Overflow("determinant"))
}

/// Classical adjugate, `adj(M) * M = det(M) * I`.
pub fn adjugate(m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_square() {
        return Err(Error::Dimension {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    let n = m.nrows();
    if n == 1 {
        return Ok(IntMatrix { rows: vec![vec![1]] });
    }
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            // adj[i][j] = (-1)^{i+j} * minor(j, i)
            let c = determinant(&m.minor(j, i))?;
            *entry = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    Ok(IntMatrix { rows })
}

pub(crate) fn edge_matrix(vertices: &[Vec<i64>]) -> Result<IntMatrix> {
    let dim = vertices.first().map_or(0, Vec::len);
    if vertices.len() != dim + 1 {
        return Err(Error::Dimension {
            expected: dim + 1,
            found: vertices.len(),
        });
    }
    let origin = &vertices[0];
    let mut cols = Vec::with_capacity(dim);
    for v in &vertices[1..] {
        if v.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: v.len(),
            });
        }
        let col = v
            .iter()
            .zip(origin)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow("edge vector")))
            .collect::<Result<Vec<_>>>()?;
        cols.push(col);
    }
    IntMatrix::from_columns(&cols)
}

/// Signed `d!`-normalized volume of a simplex given by `d + 1` vertices.
pub fn simplex_determinant(vertices: &[Vec<i64>]) -> Result<i64> {
    let m = edge_matrix(vertices)?;
    if m.nrows() == 0 {
        return Ok(1);
    }
    determinant(&m)
}

pub fn simplex_is_unimodular(vertices: &[Vec<i64>]) -> Result<bool> {
    Ok(simplex_determinant(vertices)?.abs() == 1)
}

/// Whether the integer span of `points` is all of `Z^dim`, by incremental
/// Hermite-style reduction into an upper triangular basis.
pub fn span_is_full(points: &[Vec<i64>], dim: usize) -> Result<bool> {
    let mut basis: Vec<Option<Vec<i128>>> = vec![None; dim];
    for p in points {
        if p.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: p.len(),
            });
        }
        let mut v: Vec<i128> = p.iter().map(|&x| x as i128).collect();
        for col in 0..dim {
            if v[col] == 0 {
                continue;
            }
            match basis[col].take() {
                None => {
                    if v[col] < 0 {
                        v.iter_mut().for_each(|x| *x = -*x);
                    }
                    basis[col] = Some(v);
                    break;
                }
                Some(b) => {
                    let (a, c) = (b[col], v[col]);
                    let eg = a.extended_gcd(&c);
                    let (g, x, y) = (eg.gcd, eg.x, eg.y);
                    let (ag, cg) = (a / g, c / g);
                    let mut pivot = Vec::with_capacity(dim);
                    let mut rest = Vec::with_capacity(dim);
                    for k in 0..dim {
                        let pk = x
                            .checked_mul(b[k])
                            .zip(y.checked_mul(v[k]))
                            .and_then(|(l, r)| l.checked_add(r));
                        let rk = ag
                            .checked_mul(v[k])
                            .zip(cg.checked_mul(b[k]))
                            .and_then(|(l, r)| l.checked_sub(r));
                        pivot.push(pk.ok_or(Error::Overflow("lattice span"))?);
                        rest.push(rk.ok_or(Error::Overflow("lattice span"))?);
                    }
                    if pivot[col] < 0 {
                        pivot.iter_mut().for_each(|x| *x = -*x);
                    }
                    basis[col] = Some(pivot);
                    v = rest;
                }
            }
        }
    }
    Ok(basis
        .iter()
        .all(|b| matches!(b, Some(row) if row.iter().find(|&&x| x != 0) == Some(&1))))
}
