mod common;

use std::collections::BTreeSet;

use common::{random_map, random_morphism};
use pnmaps::algebra::Field;
use pnmaps::git::{
    classify, codimension_report, diagonal_destabilizer, enumerate_chambers, hm_weight, witness_semistable_not_stable,
    StabilityStatus, SupportProfile,
};
use pnmaps::poly::{Monomial, ProjectiveMatrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Positions = BTreeSet<(Monomial, usize)>;

fn permute(set: &Positions, sigma: &[usize]) -> Positions {
    set.iter()
        .map(|(m, i)| {
            let mut e = vec![0; sigma.len()];
            for (j, &x) in m.exponents().iter().enumerate() {
                e[sigma[j]] = x;
            }
            (Monomial::new(e), sigma[*i])
        })
        .collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for slot in 0..k {
            let mut q = p.clone();
            q.insert(slot, k - 1);
            out.push(q);
        }
    }
    out
}

fn box_weights(k: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k - 1 {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| (-bound..=bound).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out.into_iter()
        .map(|mut v| {
            v.push(-v.iter().sum::<i64>());
            v
        })
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn chambers_cover_every_weight(a0 in -20i64..20, a1 in -20i64..20, n in 1usize..3, d in 1u32..5) {
        let a: Vec<i64> = if n == 1 { vec![a0, -a0] } else { vec![a0, a1, -a0 - a1] };
        prop_assume!(a.iter().any(|&x| x != 0));
        let profile = SupportProfile::from_weights(n, d, &a);
        let chambers = enumerate_chambers(n, d).unwrap();
        let found = permutations(n + 1).iter().any(|sigma| {
            let ns = permute(&profile.nonstable, sigma);
            let us = permute(&profile.unstable, sigma);
            chambers.iter().any(|c| c.nonstable == ns && c.unstable == us)
        });
        prop_assert!(found, "weights {:?}", a);
        prop_assert!(profile.nonstable.is_subset(&profile.unstable));
    }

    #[test]
    fn destabilizers_agree_with_box_search(seed in any::<u64>(), n in 1usize..3, d in 1u32..4) {
        let field = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(phi) = random_map(field, n, d, 0.25, &mut rng) else { return Ok(()) };
        for strict in [false, true] {
            let found = diagonal_destabilizer(&phi, strict).unwrap();
            if let Some(a) = &found {
                let mu = hm_weight(&phi, a).unwrap();
                let ok = if strict { mu > 0 } else { mu >= 0 };
                prop_assert!(ok, "weight {} for {:?}", mu, a);
            }
            let boxed = box_weights(n + 1, 6).into_iter().find(|a| {
                let mu = hm_weight(&phi, a).unwrap();
                if strict { mu > 0 } else { mu >= 0 }
            });
            if boxed.is_some() {
                prop_assert!(found.is_some(), "box found {:?}", boxed);
            }
        }
    }

    #[test]
    fn morphisms_are_stable(seed in any::<u64>(), n in 1usize..3, d in 2u32..4) {
        let field = Field::rationals();
        let phi = random_morphism(field, n, d, 0.6, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(diagonal_destabilizer(&phi, false).unwrap(), None);
        prop_assert_eq!(classify(&phi).unwrap().status, StabilityStatus::StableCertified);
    }

    #[test]
    fn verdict_ignores_diagonal_conjugation(seed in any::<u64>(), d in 1u32..4) {
        let field = Field::rationals();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(phi) = random_map(field, 2, d, 0.3, &mut rng) else { return Ok(()) };
        let diag = ProjectiveMatrix::diagonal(field, &[field.from_i64(2), field.from_i64(-3), field.one()]).unwrap();
        let psi = phi.conjugate(&diag).unwrap();
        prop_assert_eq!(psi.coefficient_support(), phi.coefficient_support());
        for strict in [false, true] {
            prop_assert_eq!(
                diagonal_destabilizer(&phi, strict).unwrap().is_some(),
                diagonal_destabilizer(&psi, strict).unwrap().is_some()
            );
        }
    }
}

#[test]
fn witnesses_are_semistable_but_not_stable() {
    for field in [Field::rationals(), Field::prime(2).unwrap()] {
        for n in 2..4 {
            for d in 2..5 {
                let phi = witness_semistable_not_stable(field, n, d).unwrap();
                assert!(diagonal_destabilizer(&phi, false).unwrap().is_some(), "n = {n}, d = {d}");
                assert_eq!(diagonal_destabilizer(&phi, true).unwrap(), None, "n = {n}, d = {d}");
            }
        }
    }
}

#[test]
fn codimension_bounds_hold() {
    for (n, d) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4)] {
        let report = codimension_report(n, d).unwrap();
        assert!(report.holds(), "n = {n}, d = {d}: {report:?}");
    }
}

fn profile_sets(n: usize, d: u32) -> (BTreeSet<Positions>, BTreeSet<Positions>) {
    let chambers = enumerate_chambers(n, d).unwrap();
    (chambers.iter().map(|c| c.nonstable.clone()).collect(), chambers.iter().map(|c| c.unstable.clone()).collect())
}

#[test]
fn nonstable_and_unstable_profiles_coincide_exactly_in_even_binary_degree() {
    for d in 2u32..7 {
        let (ns, us) = profile_sets(1, d);
        assert_eq!(ns == us, d % 2 == 0, "d = {d}");
    }
    for d in 2u32..4 {
        let (ns, us) = profile_sets(2, d);
        assert_ne!(ns, us, "n = 2, d = {d}");
    }
}

#[test]
fn profiles_are_monotone_and_contain_pure_powers() {
    for (n, d) in [(1, 2), (1, 3), (1, 5), (2, 2), (2, 3), (2, 4)] {
        for c in enumerate_chambers(n, d).unwrap() {
            for i in 0..=n {
                assert!(c.unstable.contains(&(Monomial::pure_power(n + 1, 0, d), i)));
                if d > 1 {
                    assert!(c.nonstable.contains(&(Monomial::pure_power(n + 1, 0, d), i)));
                }
            }
            for set in [&c.nonstable, &c.unstable] {
                for (m, i) in set {
                    for j in i + 1..=n {
                        assert!(set.contains(&(m.clone(), j)), "{:?}: ({m}, {i}) without ({m}, {j})", c.representative);
                    }
                }
            }
        }
    }
}

#[test]
fn weights_follow_coordinate_permutations() {
    let field = Field::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e);
    for _ in 0..50 {
        let Some(phi) = random_map(field, 2, 3, 0.3, &mut rng) else { continue };
        for sigma in permutations(3) {
            let p = ProjectiveMatrix::permutation(field, &sigma);
            let psi = phi.conjugate(&p).unwrap();
            for a in box_weights(3, 3) {
                // P e_j = e_sigma(j), so x_j of phi becomes x_sigma(j) of psi
                let mut moved = vec![0; 3];
                for (j, &s) in sigma.iter().enumerate() {
                    moved[s] = a[j];
                }
                assert_eq!(hm_weight(&phi, &a).unwrap(), hm_weight(&psi, &moved).unwrap());
            }
        }
    }
}

#[test]
fn conjugated_morphisms_have_no_destabilizer() {
    let field = Field::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ab);
    for (n, d) in [(1, 2), (1, 3), (2, 2)] {
        for _ in 0..100 {
            let phi = random_morphism(field, n, d, 0.5, &mut rng);
            for _ in 0..5 {
                let b = pnmaps::resultant::random_invertible(field, n + 1, &mut rng);
                let psi = phi.conjugate(&b).unwrap();
                assert_eq!(diagonal_destabilizer(&psi, false).unwrap(), None);
            }
        }
    }
}
