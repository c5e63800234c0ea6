//! Dense exact linear algebra over a [`Field`].
//!
//! Ranks and determinants over Q go through fraction-free (Bareiss) elimination
//! on integer matrices; everything else uses ordinary Gaussian elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, FieldValue};
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<FieldValue>>;

pub fn zero_matrix(field: Field, rows: usize, cols: usize) -> Matrix {
    vec![vec![field.zero(); cols]; rows]
}

pub fn identity(field: Field, size: usize) -> Matrix {
    (0..size)
        .map(|i| (0..size).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<FieldValue>], b: &[Vec<FieldValue>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "incompatible matrix shapes");
            (0..cols)
                .map(|j| {
                    let mut acc = row[0].field().zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<FieldValue>], v: &[FieldValue]) -> Vec<FieldValue> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(v[0].field().zero(), |acc, (x, y)| &acc + &(x * y))
        })
        .collect()
}

/// Rows scaled by the lcm of their denominators, with the product of the
/// scale factors.
fn integer_rows(m: &[Vec<FieldValue>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .map(|x| x.as_rational().expect("rational entries").denom().clone())
                .fold(BigInt::one(), |acc, d| acc.lcm(&d));
            scale *= &l;
            row.iter()
                .map(|x| {
                    let r = x.as_rational().unwrap();
                    r.numer() * (&l / r.denom())
                })
                .collect()
        })
        .collect();
    (rows, scale)
}

/// Fraction-free echelon elimination. Returns the rank and, for square
/// full-rank input, the determinant.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        if pivot != rank {
            a.swap(pivot, rank);
            sign = -sign;
        }
        let (top, bottom) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            for j in col + 1..cols {
                let v = &prow[col] * &row[j] - &row[col] * &prow[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    let det = if rank == rows && rows == cols { prev * sign } else { BigInt::zero() };
    (rank, det)
}

/// Row echelon form by Gaussian elimination; returns the pivot columns.
fn echelon(m: &mut Matrix, reduce: bool) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(p, r);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        let start = if reduce { 0 } else { r + 1 };
        for i in start..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                if !m[r][j].is_zero() {
                    m[i][j] = &m[i][j] - &(&f * &m[r][j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<FieldValue>]) -> usize {
    let Some(first) = m.iter().flatten().next() else { return 0 };
    if first.field().is_rationals() {
        bareiss(integer_rows(m).0).0
    } else {
        let mut work = m.to_vec();
        echelon(&mut work, false).len()
    }
}

pub fn determinant(field: Field, m: &[Vec<FieldValue>]) -> FieldValue {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return field.one();
    }
    if field.is_rationals() {
        let (rows, scale) = integer_rows(m);
        let det = bareiss(rows).1;
        return field
            .from_rational(&BigRational::new(det, scale))
            .expect("nonzero scale");
    }
    let mut a = m.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return field.zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inv().unwrap();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                a[i][j] = &a[i][j] - &(&f * &a[c][j]);
            }
        }
    }
    det
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &[Vec<FieldValue>]) -> (Matrix, Vec<usize>) {
    let mut work = m.to_vec();
    let pivots = echelon(&mut work, true);
    (work, pivots)
}

/// A basis of `{v : m v = 0}`, one vector per free column.
pub fn nullspace(field: Field, m: &[Vec<FieldValue>], cols: usize) -> Vec<Vec<FieldValue>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[row][f];
            }
            v
        })
        .collect()
}

/// Some solution of `m x = b`, if one exists.
pub fn solve(field: Field, m: &[Vec<FieldValue>], b: &[FieldValue]) -> Option<Vec<FieldValue>> {
    let cols = m.first().map_or(0, Vec::len);
    let aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[row][cols].clone();
    }
    Some(x)
}

pub fn inverse(field: Field, m: &[Vec<FieldValue>]) -> Result<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    Ok(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Rational vector scaled to coprime integers (sign preserved).
pub fn primitive_integer_vector(v: &[FieldValue]) -> Vec<BigInt> {
    let rats: Vec<&BigRational> = v.iter().map(|x| x.as_rational().expect("rational")).collect();
    let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&l / r.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}
