//! Exact feasibility for homogeneous integer cones.
//!
//! Nonzero points of `{a : w·a >= 0 for every row w, sum(a) = 0}` (and the
//! strict variant `w·a >= 1`) are found with a phase-one simplex that pivots
//! fraction-free on integers, Bland's rule for termination. The tableau runs in
//! `i128` and is redone over `BigInt` if any intermediate overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use super::field::Field;
use super::linalg;
use crate::error::{Error, Result};

/// Inequalities `w·a >= 0` (or `w·a >= 1` when `strict`) in `dimension` unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeProblem {
    pub dimension: usize,
    pub rows: Vec<Vec<i64>>,
    pub strict: bool,
}

impl ConeProblem {
    pub fn new(dimension: usize, rows: Vec<Vec<i64>>, strict: bool) -> Result<Self> {
        let p = ConeProblem { dimension, rows, strict };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        if let Some(r) = self.rows.iter().find(|r| r.len() != self.dimension) {
            return Err(Error::DimensionMismatch { expected: self.dimension, found: r.len() });
        }
        Ok(())
    }

    /// Exact membership test for a candidate witness.
    pub fn admits(&self, a: &[i64], zero_sum: bool) -> bool {
        if a.len() != self.dimension || a.iter().all(|&x| x == 0) {
            return false;
        }
        if zero_sum && a.iter().map(|&x| x as i128).sum::<i128>() != 0 {
            return false;
        }
        let bound = if self.strict { 1 } else { 0 };
        self.rows
            .iter()
            .all(|w| w.iter().zip(a).map(|(&x, &y)| x as i128 * y as i128).sum::<i128>() >= bound)
    }
}

/// A coprime integer witness of the cone problem, or `None` if only `a = 0`
/// (non-strict) or nothing (strict) satisfies it.
pub fn homogeneous_cone_feasibility(problem: &ConeProblem, zero_sum: bool) -> Result<Option<Vec<i64>>> {
    problem.check()?;
    let m = problem.dimension;
    if m == 0 {
        return Ok(None);
    }
    let mut rows = problem.rows.clone();
    rows.sort();
    rows.dedup();

    let witness = if rows.is_empty() {
        any_nonzero(m, zero_sum)
    } else {
        let (equations, rhs) = standard_form(&rows, m, zero_sum, problem.strict);
        let solution = match phase_one::<i128>(&to_i128(&equations), &rhs.iter().map(|&b| b as i128).collect::<Vec<_>>()) {
            Some(s) => s.map(|x| x.into_iter().map(BigInt::from).collect()),
            None => phase_one::<BigInt>(&to_big(&equations), &rhs.iter().map(|&b| BigInt::from(b)).collect::<Vec<_>>())
                .expect("BigInt pivoting cannot overflow"),
        };
        match solution {
            Some(x) => {
                let a: Vec<BigInt> = (0..m).map(|i| &x[i] - &x[m + i]).collect();
                Some(a)
            }
            None if !problem.strict => lineality_vector(&rows, m, zero_sum),
            None => None,
        }
    };

    let Some(a) = witness else { return Ok(None) };
    let g = a.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let a: Vec<i64> = a
        .iter()
        .map(|x| (x / &g).to_i64().ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    debug_assert!(problem.admits(&a, zero_sum), "cone witness fails verification");
    Ok(Some(a))
}

fn any_nonzero(m: usize, zero_sum: bool) -> Option<Vec<BigInt>> {
    if !zero_sum {
        let mut a = vec![BigInt::zero(); m];
        a[0] = BigInt::one();
        return Some(a);
    }
    if m < 2 {
        return None;
    }
    let mut a = vec![BigInt::zero(); m];
    a[0] = BigInt::one();
    a[1] = -BigInt::one();
    Some(a)
}

/// Equality form over nonnegative variables `(a+, a-, slacks)`.
fn standard_form(rows: &[Vec<i64>], m: usize, zero_sum: bool, strict: bool) -> (Vec<Vec<i64>>, Vec<i64>) {
    let slacks = rows.len() + usize::from(!strict);
    let width = 2 * m + slacks;
    let mut equations = Vec::new();
    let mut rhs = Vec::new();
    let split = |w: &[i64], eq: &mut Vec<i64>| {
        for (i, &x) in w.iter().enumerate() {
            eq[i] = x;
            eq[m + i] = -x;
        }
    };
    for (r, w) in rows.iter().enumerate() {
        let mut eq = vec![0; width];
        split(w, &mut eq);
        eq[2 * m + r] = -1;
        equations.push(eq);
        rhs.push(i64::from(strict));
    }
    if !strict {
        // Normalization: the sum of all row values is at least 1.
        let total: Vec<i64> = (0..m).map(|i| rows.iter().map(|w| w[i]).sum()).collect();
        let mut eq = vec![0; width];
        split(&total, &mut eq);
        eq[width - 1] = -1;
        equations.push(eq);
        rhs.push(1);
    }
    if zero_sum {
        let mut eq = vec![0; width];
        split(&vec![1; m], &mut eq);
        equations.push(eq);
        rhs.push(0);
    }
    (equations, rhs)
}

fn to_i128(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

trait Exact: Clone + Ord + Zero + One + Signed + CheckedMul + CheckedSub + Integer {}
impl<T: Clone + Ord + Zero + One + Signed + CheckedMul + CheckedSub + Integer> Exact for T {}

/// Feasibility of `A x = b, x >= 0`. Outer `None` signals arithmetic overflow;
/// otherwise returns a solution scaled to integers.
fn phase_one<T: Exact>(a: &[Vec<T>], b: &[T]) -> Option<Option<Vec<T>>> {
    let rows = a.len();
    let vars = a[0].len();
    let width = vars + rows + 1; // originals, artificials, rhs
    let mut tab: Vec<Vec<T>> = Vec::with_capacity(rows + 1);
    for i in 0..rows {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for j in 0..vars {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..rows {
            row.push(if k == i { T::one() } else { T::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        tab.push(row);
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut objective = vec![T::zero(); width];
    for j in (0..vars).chain(std::iter::once(width - 1)) {
        let mut s = T::zero();
        for row in &tab {
            s = s.checked_sub(&row[j])?;
        }
        objective[j] = s;
    }
    tab.push(objective);
    let mut basis: Vec<usize> = (vars..vars + rows).collect();
    let mut prev = T::one();

    loop {
        let obj = &tab[rows];
        let Some(col) = (0..width - 1).find(|&j| obj[j].is_negative()) else { break };
        let mut pivot: Option<usize> = None;
        for i in 0..rows {
            if !tab[i][col].is_positive() {
                continue;
            }
            pivot = Some(match pivot {
                None => i,
                Some(p) => {
                    let lhs = tab[i][width - 1].checked_mul(&tab[p][col])?;
                    let rhs = tab[p][width - 1].checked_mul(&tab[i][col])?;
                    if lhs < rhs || (lhs == rhs && basis[i] < basis[p]) {
                        i
                    } else {
                        p
                    }
                }
            });
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        let r = pivot.expect("phase-one objective is bounded");
        let pv = tab[r][col].clone();
        for i in 0..=rows {
            if i == r {
                continue;
            }
            let factor = tab[i][col].clone();
            for j in 0..width {
                let v = tab[i][j]
                    .checked_mul(&pv)?
                    .checked_sub(&factor.checked_mul(&tab[r][j])?)?;
                tab[i][j] = v.div_floor(&prev);
            }
        }
        prev = pv;
        basis[r] = col;
    }

    if !tab[rows][width - 1].is_zero() {
        return Some(None);
    }
    let mut x = vec![T::zero(); vars];
    for (i, &v) in basis.iter().enumerate() {
        if v < vars {
            x[v] = tab[i][width - 1].clone();
        }
    }
    // Basic values are x_v = rhs / prev with prev > 0; keep the numerators.
    Some(Some(x))
}

/// Nonzero `a` with `w·a = 0` for every row (and `sum(a) = 0` if requested).
fn lineality_vector(rows: &[Vec<i64>], m: usize, zero_sum: bool) -> Option<Vec<BigInt>> {
    let q = Field::rationals();
    let mut matrix: Vec<Vec<_>> = rows.iter().map(|w| w.iter().map(|&x| q.from_i64(x)).collect()).collect();
    if zero_sum {
        matrix.push(vec![q.one(); m]);
    }
    let basis = linalg::nullspace(q, &matrix, m);
    basis.first().map(|v| linalg::primitive_integer_vector(v))
}
