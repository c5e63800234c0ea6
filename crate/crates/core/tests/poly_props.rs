mod common;

use common::{binary_map, random_map, random_morphism};
use pnmaps::algebra::linalg::determinant;
use pnmaps::algebra::{Field, FieldValue};
use pnmaps::parse::{parse_map, print_map};
use pnmaps::poly::{binary_gcd, binary_roots, proj_equal, Monomial, ProjectiveMatrix, RationalMap};
use pnmaps::resultant::{is_morphism, random_invertible, resultant_value};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn field_for(k: usize) -> Field {
    [Field::rationals(), Field::prime(5).unwrap(), Field::galois(2, 2).unwrap(), Field::prime(13).unwrap()][k]
}

/// Sylvester determinant of the dehomogenized components, highest degree first.
fn sylvester(phi: &RationalMap) -> FieldValue {
    let field = phi.field();
    let d = phi.degree() as usize;
    let coeffs = |i: usize| -> Vec<FieldValue> {
        (0..=d).rev().map(|k| phi.coefficient(&Monomial::new(vec![k as u32, (d - k) as u32]), i)).collect()
    };
    let (p, q) = (coeffs(0), coeffs(1));
    let size = 2 * d;
    let mut m = vec![vec![field.zero(); size]; size];
    for r in 0..d {
        for (k, c) in p.iter().enumerate() {
            m[r][r + k] = c.clone();
        }
        for (k, c) in q.iter().enumerate() {
            m[d + r][r + k] = c.clone();
        }
    }
    determinant(field, &m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn substitution_composes(seed in any::<u64>(), k in 0usize..4, n in 1usize..3, d in 1u32..4) {
        let field = field_for(k);
        let mut r = rng(seed);
        let Some(phi) = random_map(field, n, d, 0.7, &mut r) else { return Ok(()) };
        let m = random_invertible(field, n + 1, &mut r);
        let l = random_invertible(field, n + 1, &mut r);
        let once = phi.substitute(&m).unwrap().substitute(&l).unwrap();
        prop_assert!(proj_equal(&once, &phi.substitute(&m.mul(&l)).unwrap()));
        let twice = phi.conjugate(&m).unwrap().conjugate(&l).unwrap();
        prop_assert!(proj_equal(&twice, &phi.conjugate(&l.mul(&m)).unwrap()));
    }

    #[test]
    fn conjugation_intertwines_evaluation(seed in any::<u64>(), k in 0usize..4, d in 1u32..4) {
        let field = field_for(k);
        let mut r = rng(seed);
        let Some(phi) = random_map(field, 2, d, 0.8, &mut r) else { return Ok(()) };
        let a = random_invertible(field, 3, &mut r);
        let psi = phi.conjugate(&a).unwrap();
        let x: Vec<FieldValue> = (0..3).map(|_| common::random_element(field, 4, &mut r)).collect();
        let lhs = psi.evaluate(&a.apply(&x)).unwrap();
        let rhs = a.apply(&phi.evaluate(&x).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                prop_assert_eq!(&lhs[i] * &rhs[j], &lhs[j] * &rhs[i]);
            }
        }
    }

    #[test]
    fn morphism_property_is_conjugation_invariant(seed in any::<u64>(), k in 0usize..4, n in 1usize..3, d in 2u32..4) {
        let field = field_for(k);
        let mut r = rng(seed);
        let Some(phi) = random_map(field, n, d, 0.5, &mut r) else { return Ok(()) };
        let a = random_invertible(field, n + 1, &mut r);
        prop_assert_eq!(is_morphism(&phi), is_morphism(&phi.conjugate(&a).unwrap()));
    }

    #[test]
    fn resultant_transformation_laws(seed in any::<u64>(), k in 0usize..4, n in 1usize..3, d in 1u32..3) {
        let field = field_for(k);
        let mut r = rng(seed);
        let phi = random_morphism(field, n, d, 0.8, &mut r);
        let a = random_invertible(field, n + 1, &mut r);
        let res = resultant_value(&phi).unwrap();
        let det = a.determinant();
        let d = d as u64;
        let right = resultant_value(&phi.substitute(&a).unwrap()).unwrap();
        prop_assert_eq!(right, &res * &det.pow(d.pow(n as u32 + 1)));
        let left = resultant_value(&phi.apply_on_left(&a).unwrap()).unwrap();
        prop_assert_eq!(left, &res * &det.pow(d.pow(n as u32)));
        let c = common::random_nonzero(field, 4, &mut r);
        let scaled = resultant_value(&phi.scale(&c)).unwrap();
        prop_assert_eq!(scaled, &res * &c.pow((n as u64 + 1) * d.pow(n as u32)));
    }

    #[test]
    fn binary_resultant_matches_sylvester(seed in any::<u64>(), k in 0usize..4, d in 1u32..5) {
        let field = field_for(k);
        let mut r = rng(seed);
        let Some(phi) = random_map(field, 1, d, 0.7, &mut r) else { return Ok(()) };
        let sign = sylvester(&RationalMap::power_map(field, 1, d));
        prop_assert_eq!(resultant_value(&phi).unwrap(), &sign * &sylvester(&phi));
    }

    #[test]
    fn gcd_detects_common_roots(seed in any::<u64>(), d in 1u32..5) {
        let field = Field::prime(7).unwrap();
        let mut r = rng(seed);
        let Some(phi) = random_map(field, 1, d, 0.6, &mut r) else { return Ok(()) };
        let g = binary_gcd(phi.component(0), phi.component(1)).unwrap();
        prop_assert_eq!(g.degree() == 0, is_morphism(&phi));
        prop_assert!(phi.component(0).divide(&g).is_some() || phi.component(0).is_zero());
        prop_assert!(phi.component(1).divide(&g).is_some() || phi.component(1).is_zero());
        if g.degree() > 0 {
            if let Ok(roots) = binary_roots(&g) {
                for pt in roots {
                    prop_assert!(phi.evaluate_point(&pt).unwrap().iter().all(|v| v.is_zero()));
                }
            }
        }
    }

    #[test]
    fn printed_maps_parse_back(seed in any::<u64>(), k in 0usize..4, n in 1usize..4, d in 1u32..4) {
        let field = field_for(k);
        let Some(phi) = random_map(field, n, d, 0.4, &mut rng(seed)) else { return Ok(()) };
        let text = print_map(&phi);
        prop_assert_eq!(parse_map(&text, field).unwrap(), phi);
    }
}

#[test]
fn resultant_of_a_classic_pair() {
    let q = Field::rationals();
    // (x^2 + y^2, x y)
    let phi = binary_map(q, &[(1, [2, 0]), (1, [0, 2])], &[(1, [1, 1])]);
    assert_eq!(resultant_value(&phi).unwrap(), q.one());
    // (x^2 - y^2, x y + y^2) share x + y
    let degenerate = binary_map(q, &[(1, [2, 0]), (-1, [0, 2])], &[(1, [1, 1]), (1, [0, 2])]);
    assert!(!is_morphism(&degenerate));
    assert!(resultant_value(&degenerate).unwrap().is_zero());
}

#[test]
fn invertible_samples_are_invertible() {
    let mut r = rng(7);
    for field in [Field::prime(2).unwrap(), Field::galois(3, 2).unwrap(), Field::rationals()] {
        for size in 1..5 {
            let m = random_invertible(field, size, &mut r);
            assert!(!m.determinant().is_zero());
            assert!(m.mul(&m.inverse()).is_identity());
        }
    }
    assert!(ProjectiveMatrix::from_integers(Field::prime(2).unwrap(), &[vec![1, 1], vec![1, 1]]).is_err());
}
