//! Macaulay matrices, the morphism test and exact resultant values.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{Field, FieldValue};
use crate::error::{Error, Result};
use crate::poly::{Monomial, ProjectiveMatrix, ProjectivePoint, RationalMap};

const MAX_RETRIES: usize = 20;

/// Critical degree `D = (n+1)(d-1) + 1`.
pub fn macaulay_degree(n: usize, d: u32) -> u32 {
    (n as u32 + 1) * (d - 1) + 1
}

/// The full Macaulay matrix at the critical degree: one row per multiple
/// `m * q_i` with `deg m = D - d`, one column per monomial of degree `D`.
#[derive(Clone, Debug)]
pub struct MacaulaySystem {
    pub n: usize,
    pub d: u32,
    pub critical_degree: u32,
    pub rows: Vec<(Monomial, usize)>,
    pub columns: Vec<Monomial>,
    pub matrix: Matrix,
}

impl MacaulaySystem {
    pub fn new(phi: &RationalMap) -> Self {
        let (n, d) = (phi.n(), phi.degree());
        let big_d = macaulay_degree(n, d);
        let columns = Monomial::all_of_degree(n + 1, big_d);
        let index = column_index(&columns);
        let multipliers = Monomial::all_of_degree(n + 1, big_d - d);
        let rows: Vec<(Monomial, usize)> =
            multipliers.iter().flat_map(|m| (0..=n).map(move |i| (m.clone(), i))).collect();
        let matrix = rows.iter().map(|(m, i)| shifted_row(phi, m, *i, &index)).collect();
        MacaulaySystem { n, d, critical_degree: big_d, rows, columns, matrix }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }
}

fn column_index(columns: &[Monomial]) -> HashMap<Monomial, usize> {
    columns.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect()
}

fn shifted_row(phi: &RationalMap, m: &Monomial, i: usize, index: &HashMap<Monomial, usize>) -> Vec<FieldValue> {
    let mut row = vec![phi.field().zero(); index.len()];
    for (mono, c) in phi.component(i).terms() {
        row[index[&m.mul(mono)]] = c.clone();
    }
    row
}

/// No common zero over the algebraic closure: the Macaulay matrix has full
/// column rank.
pub fn is_morphism(phi: &RationalMap) -> bool {
    let system = MacaulaySystem::new(phi);
    system.rank() == system.columns.len()
}

/// Square Macaulay matrix and its reduced minor `M'`, both over `phi`'s field.
fn quotient_matrices(phi: &RationalMap) -> (Matrix, Matrix) {
    let (n, d) = (phi.n(), phi.degree());
    let big_d = macaulay_degree(n, d);
    let columns = Monomial::all_of_degree(n + 1, big_d);
    let index = column_index(&columns);
    let mut full = Vec::with_capacity(columns.len());
    let mut non_reduced = Vec::new();
    for (k, alpha) in columns.iter().enumerate() {
        let e = alpha.exponents();
        let divisible: Vec<usize> = (0..=n).filter(|&i| e[i] >= d).collect();
        let i = divisible[0];
        let m = Monomial::pure_power(n + 1, i, d).quotient_of(alpha).unwrap();
        full.push(shifted_row(phi, &m, i, &index));
        if divisible.len() > 1 {
            non_reduced.push(k);
        }
    }
    let minor = non_reduced
        .iter()
        .map(|&r| non_reduced.iter().map(|&c| full[r][c].clone()).collect())
        .collect();
    (full, minor)
}

/// `det M / det M'`, or `None` when the minor vanishes.
fn macaulay_quotient(phi: &RationalMap) -> Option<FieldValue> {
    let field = phi.field();
    let (full, minor) = quotient_matrices(phi);
    let denominator = linalg::determinant(field, &minor);
    if denominator.is_zero() {
        return None;
    }
    let numerator = linalg::determinant(field, &full);
    Some(numerator.checked_div(&denominator).unwrap())
}

/// Exact Macaulay resultant, normalized so that `Res(x_0^d, ..., x_n^d) = 1`.
///
/// Deterministic: retries after a vanishing minor use a fixed-seed generator.
pub fn resultant_value(phi: &RationalMap) -> Result<FieldValue> {
    resultant_value_with_rng(phi, &mut ChaCha8Rng::seed_from_u64(0))
}

/// [`resultant_value`] with the retry generator seeded by `seed`.
pub fn resultant_value_seeded(phi: &RationalMap, seed: u64) -> Result<FieldValue> {
    resultant_value_with_rng(phi, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn resultant_value_with_rng<R: Rng>(phi: &RationalMap, rng: &mut R) -> Result<FieldValue> {
    let field = phi.field();
    if !is_morphism(phi) {
        return Ok(field.zero());
    }
    if let Some(v) = macaulay_quotient(phi) {
        return Ok(v);
    }
    // Res(phi(Lx)) = det(L)^(d^(n+1)) Res(phi). Tiny fields may not contain a
    // good L, so retries run over an extension with at least 64 elements.
    let work = retry_field(field)?;
    let lifted = phi.coerce_into(work)?;
    let exponent = (phi.degree() as u64).pow(phi.n() as u32 + 1);
    for _ in 0..MAX_RETRIES {
        let l = random_invertible(work, phi.n() + 1, rng);
        let Some(v) = macaulay_quotient(&lifted.substitute(&l)?) else { continue };
        let value = v.checked_div(&l.determinant().pow(exponent))?;
        return pull_back(&value, field);
    }
    Err(Error::UnluckySpecialization { attempts: MAX_RETRIES })
}

fn retry_field(field: Field) -> Result<Field> {
    match field.size() {
        Some(q) if q < 64 => {
            let mut m = 2;
            while q.pow(m as u32) < 64 {
                m += 1;
            }
            field.extension_of_degree(m)
        }
        _ => Ok(field),
    }
}

fn pull_back(value: &FieldValue, field: Field) -> Result<FieldValue> {
    if value.field() == field {
        return Ok(value.clone());
    }
    let embedding = field.embedding_into(value.field())?;
    field
        .enumerate()?
        .into_iter()
        .find(|x| embedding.apply(x) == *value)
        .ok_or(Error::DescriptorMismatch)
}

/// Random invertible matrix: entries in `-3..=3` over Q, uniform otherwise.
pub fn random_invertible<R: Rng>(field: Field, size: usize, rng: &mut R) -> ProjectiveMatrix {
    loop {
        let entries: Matrix = (0..size)
            .map(|_| (0..size).map(|_| random_element(field, rng)).collect())
            .collect();
        if let Ok(m) = ProjectiveMatrix::new(field, entries) {
            return m;
        }
    }
}

fn random_element<R: Rng>(field: Field, rng: &mut R) -> FieldValue {
    match field.size() {
        None => field.from_i64(rng.gen_range(-3..=3)),
        Some(q) => field.element(rng.gen_range(0..q)).unwrap(),
    }
}

/// A common zero of the components in `P^n(F_{q^m})` for the smallest
/// `m <= max_ext` that has one.
pub fn brute_force_common_root(phi: &RationalMap, max_ext: usize) -> Result<Option<ProjectivePoint>> {
    let field = phi.field();
    if !field.is_finite() {
        return Err(Error::InfiniteField);
    }
    for m in 1..=max_ext {
        let ext = field.extension_of_degree(m)?;
        let lifted = phi.coerce_into(ext)?;
        for point in ProjectivePoint::enumerate(ext, phi.n())? {
            if lifted.components().iter().all(|c| c.evaluate(point.coords()).is_ok_and(|v| v.is_zero())) {
                return Ok(Some(point));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::HomogeneousPolynomial;

    fn binary(field: Field, comps: &[&[(i64, [u32; 2])]]) -> RationalMap {
        let components = comps
            .iter()
            .map(|terms| {
                let d = terms[0].1.iter().sum();
                HomogeneousPolynomial::from_terms(
                    field,
                    2,
                    d,
                    terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), field.from_i64(*c))),
                )
                .unwrap()
            })
            .collect();
        RationalMap::new(components).unwrap()
    }

    #[test]
    fn critical_degrees() {
        assert_eq!(macaulay_degree(1, 2), 3);
        assert_eq!(macaulay_degree(2, 2), 4);
        assert_eq!(macaulay_degree(1, 3), 5);
    }

    #[test]
    fn morphism_examples() {
        let q = Field::rationals();
        assert!(is_morphism(&RationalMap::power_map(q, 2, 3)));
        assert!(!is_morphism(&binary(q, &[&[(1, [2, 0])], &[(1, [1, 1])]])));
        assert!(is_morphism(&binary(q, &[&[(1, [2, 0]), (1, [0, 2])], &[(1, [1, 1])]])));
    }

    #[test]
    fn resultant_examples() {
        let q = Field::rationals();
        let phi = binary(q, &[&[(1, [2, 0]), (1, [0, 2])], &[(1, [1, 1])]]);
        assert_eq!(resultant_value(&phi).unwrap(), q.one());
        assert!(resultant_value(&binary(q, &[&[(1, [2, 0])], &[(1, [1, 1])]])).unwrap().is_zero());
        for n in 1..=2 {
            assert_eq!(resultant_value(&RationalMap::power_map(q, n, 2)).unwrap(), q.one());
        }
    }

    #[test]
    fn common_root_oracle() {
        let f2 = Field::prime(2).unwrap();
        let root = brute_force_common_root(&binary(f2, &[&[(1, [2, 0])], &[(1, [1, 1])]]), 1).unwrap();
        assert_eq!(root.unwrap().to_string(), "(0:1)");
        assert_eq!(brute_force_common_root(&RationalMap::power_map(f2, 1, 2), 2).unwrap(), None);
        let phi = binary(f2, &[&[(1, [2, 0]), (1, [0, 2])], &[(1, [1, 1])]]);
        assert_eq!(brute_force_common_root(&phi, 2).unwrap(), None);
        let q = Field::rationals();
        assert_eq!(brute_force_common_root(&RationalMap::power_map(q, 1, 2), 1), Err(Error::InfiniteField));
    }
}
