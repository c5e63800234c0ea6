//! Random samplers shared by the integration tests.
#![allow(dead_code)]

use pnmaps::algebra::{Field, FieldValue};
use pnmaps::poly::{HomogeneousPolynomial, Monomial, RationalMap};
use pnmaps::resultant::is_morphism;
use rand::Rng;

/// Integers in `-bound..=bound` over Q, uniform elements otherwise.
pub fn random_element<R: Rng>(field: Field, bound: i64, rng: &mut R) -> FieldValue {
    match field.size() {
        None => field.from_i64(rng.gen_range(-bound..=bound)),
        Some(q) => field.element(rng.gen_range(0..q)).unwrap(),
    }
}

pub fn random_nonzero<R: Rng>(field: Field, bound: i64, rng: &mut R) -> FieldValue {
    loop {
        let x = random_element(field, bound, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Each coefficient is kept with probability `density`.
pub fn random_map<R: Rng>(field: Field, n: usize, d: u32, density: f64, rng: &mut R) -> Option<RationalMap> {
    let mut coefficients = Vec::new();
    for pos in RationalMap::positions(n, d) {
        if rng.gen_bool(density) {
            coefficients.push((pos, random_element(field, 5, rng)));
        }
    }
    RationalMap::from_coefficients(field, n, d, coefficients).ok()
}

pub fn random_morphism<R: Rng>(field: Field, n: usize, d: u32, density: f64, rng: &mut R) -> RationalMap {
    loop {
        if let Some(phi) = random_map(field, n, d, density, rng) {
            if is_morphism(&phi) {
                return phi;
            }
        }
    }
}

pub fn random_form<R: Rng>(field: Field, nvars: usize, degree: u32, rng: &mut R) -> HomogeneousPolynomial {
    let terms: Vec<(Monomial, FieldValue)> = Monomial::all_of_degree(nvars, degree)
        .into_iter()
        .map(|m| (m, random_element(field, 5, rng)))
        .collect();
    HomogeneousPolynomial::from_terms(field, nvars, degree, terms).unwrap()
}

/// `x^i y^j` coefficient view used by several tests.
pub fn binary(field: Field, terms: &[(i64, [u32; 2])]) -> HomogeneousPolynomial {
    let d = terms[0].1.iter().sum();
    HomogeneousPolynomial::from_terms(
        field,
        2,
        d,
        terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), field.from_i64(*c))),
    )
    .unwrap()
}

pub fn binary_map(field: Field, p: &[(i64, [u32; 2])], q: &[(i64, [u32; 2])]) -> RationalMap {
    RationalMap::new(vec![binary(field, p), binary(field, q)]).unwrap()
}
