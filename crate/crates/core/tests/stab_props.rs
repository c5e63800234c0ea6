mod common;

use common::{binary_map, random_map, random_morphism};
use pnmaps::algebra::Field;
use pnmaps::poly::{ProjectiveMatrix, RationalMap};
use pnmaps::resultant::{is_morphism, random_invertible};
use pnmaps::stab::{
    brute_force_stabilizer, diagonal_stabilizer, monomial_stabilizer, order_statistics, stabilizer_order_bound_mod_p,
    stabilizes, FiniteSubgroup,
};
use pnmaps::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sparse_morphism(field: Field, seed: u64, d: u32) -> Option<RationalMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..20).find_map(|_| random_map(field, 1, d, 0.35, &mut rng).filter(is_morphism))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn brute_contains_monomial_contains_diagonal(seed in any::<u64>(), k in 0usize..3, d in 2u32..4) {
        let field = [Field::prime(5).unwrap(), Field::prime(7).unwrap(), Field::galois(2, 2).unwrap()][k];
        let Some(phi) = sparse_morphism(field, seed, d) else { return Ok(()) };
        let brute = brute_force_stabilizer(&phi, 1, 1).unwrap();
        let diag = diagonal_stabilizer(&phi).unwrap();
        match monomial_stabilizer(&phi) {
            Ok(mono) => {
                prop_assert!(brute.order() % mono.order() == 0);
                for g in mono.elements() {
                    prop_assert!(brute.contains(g));
                }
                for g in &diag.generators {
                    prop_assert!(mono.contains(g));
                }
            }
            Err(e) => {
                prop_assert_eq!(e, Error::InfiniteDiagonalPart);
                prop_assert!(!diag.is_finite());
            }
        }
        for g in brute.elements() {
            prop_assert!(stabilizes(g, &phi).unwrap());
        }
    }

    #[test]
    fn stabilizers_transport_under_conjugation(seed in any::<u64>(), d in 2u32..4) {
        let field = Field::prime(5).unwrap();
        let Some(phi) = sparse_morphism(field, seed, d) else { return Ok(()) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb);
        let b = random_invertible(field, 2, &mut rng);
        let psi = phi.conjugate(&b).unwrap();
        let group = brute_force_stabilizer(&phi, 1, 1).unwrap();
        for a in group.elements() {
            prop_assert!(stabilizes(&b.mul(a).mul(&b.inverse()), &psi).unwrap());
        }
        prop_assert_eq!(brute_force_stabilizer(&psi, 1, 2).unwrap().order(), group.order());
    }

    #[test]
    fn diagonal_order_matches_generated_group(seed in any::<u64>(), d in 2u32..5) {
        let field = Field::prime(11).unwrap();
        let Some(phi) = sparse_morphism(field, seed, d) else { return Ok(()) };
        let diag = diagonal_stabilizer(&phi).unwrap();
        let Some(order) = &diag.order_prime_to_p else { return Ok(()) };
        let group = FiniteSubgroup::generated_by(field, 2, &diag.generators).unwrap();
        let in_brute = brute_force_stabilizer(&phi, 1, 1).unwrap().elements().iter().filter(|g| g.is_diagonal()).count();
        prop_assert_eq!(group.order(), in_brute);
        prop_assert!((order % num_bigint::BigInt::from(group.order() as u64)) == num_bigint::BigInt::from(0));
    }
}

#[test]
fn generic_stabilizers_are_mostly_trivial() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a11);
    for q in [5u64, 7, 11] {
        let field = Field::prime(q).unwrap();
        for d in [2u32, 3] {
            let samples = 200;
            let trivial = (0..samples)
                .filter(|_| brute_force_stabilizer(&random_morphism(field, 1, d, 1.0, &mut rng), 1, 2).unwrap().is_trivial())
                .count();
            let rate = trivial as f64 / samples as f64;
            // quadratic maps with symmetry form a curve, about 1/q of the total
            let floor = if d == 2 { 1.0 - 2.0 / q as f64 } else { 0.9 };
            assert!(rate > floor, "q = {q}, d = {d}: trivial rate {rate}");
        }
    }
}

#[test]
fn known_groups() {
    let f7 = Field::prime(7).unwrap();
    // (y^2 : x^2): dihedral of order 6
    let phi = binary_map(f7, &[(1, [0, 2])], &[(1, [2, 0])]);
    let g = brute_force_stabilizer(&phi, 1, 1).unwrap();
    assert_eq!(g.order(), 6);
    assert_eq!(g.abelian_invariants(), None);
    let stats = order_statistics(&g);
    assert_eq!(stats.get(&2), Some(&3));
    assert_eq!(stats.get(&3), Some(&2));

    let q = Field::rationals();
    let cube = RationalMap::power_map(q, 1, 3);
    assert_eq!(monomial_stabilizer(&cube).unwrap().order(), 4);
    assert_eq!(stabilizer_order_bound_mod_p(&cube, &[5, 7, 11], 2).unwrap() % 4, 0);
}

#[test]
fn guards_fire() {
    let f101 = Field::prime(101).unwrap();
    let phi = RationalMap::power_map(f101, 2, 2);
    assert!(matches!(brute_force_stabilizer(&phi, 1, 1), Err(Error::SearchSpaceTooLarge { .. })));
    let q = RationalMap::power_map(Field::rationals(), 1, 2);
    assert_eq!(brute_force_stabilizer(&q, 1, 1), Err(Error::InfiniteField));
    let swap = ProjectiveMatrix::swap(Field::rationals());
    assert!(stabilizes(&swap, &q).unwrap());
}
