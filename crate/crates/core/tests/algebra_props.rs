use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use pnmaps::algebra::linalg::{determinant, inverse, mat_mul, rank};
use pnmaps::algebra::{
    enumerate_field, field_arith, homogeneous_cone_feasibility, smith_normal_form, ArithOp, ConeProblem, Field,
    FieldValue, IntegerMatrix,
};
use pnmaps::Error;
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![
        Field::rationals(),
        Field::prime(2).unwrap(),
        Field::prime(7).unwrap(),
        Field::galois(2, 3).unwrap(),
        Field::galois(3, 2).unwrap(),
        Field::galois(5, 2).unwrap(),
    ]
}

fn element(field: Field, seed: (i64, i64)) -> FieldValue {
    match field.size() {
        None => field.from_ratio(&BigInt::from(seed.0), &BigInt::from(seed.1.abs() + 1)).unwrap(),
        Some(q) => field.element(seed.0.rem_euclid(q as i64) as u64).unwrap(),
    }
}

proptest! {
    #[test]
    fn field_axioms(k in 0usize..6, a in (-50i64..50, -9i64..9), b in (-50i64..50, -9i64..9), c in (-50i64..50, -9i64..9)) {
        let field = fields()[k];
        let (a, b, c) = (element(field, a), element(field, b), element(field, c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(field_arith(&b, &a, ArithOp::Div).unwrap(), &b * &a.inv().unwrap());
        } else {
            prop_assert_eq!(a.inv(), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn frobenius_is_additive(k in 1usize..6, a in (-50i64..50, 0i64..1), b in (-50i64..50, 0i64..1)) {
        let field = fields()[k];
        let p = field.characteristic();
        let (a, b) = (element(field, a), element(field, b));
        prop_assert_eq!((&a + &b).pow(p), &a.pow(p) + &b.pow(p));
    }

    #[test]
    fn smith_form_reconstructs(rows in 1usize..4, cols in 1usize..4, seed in prop::collection::vec(-6i64..7, 16)) {
        let entries: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
        let m = IntegerMatrix::from_rows(&entries);
        let snf = smith_normal_form(&m);
        let product = snf.u.mul(&m).mul(&snf.v);
        for i in 0..rows {
            for j in 0..cols {
                let expected = if i == j { snf.invariant_factors[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&product[(i, j)], &expected);
            }
        }
        prop_assert!(snf.u.determinant().abs().is_one());
        prop_assert!(snf.v.determinant().abs().is_one());
        let factors = &snf.invariant_factors;
        for w in factors.windows(2) {
            prop_assert!(w[0] >= BigInt::zero());
            if !w[0].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            } else {
                prop_assert!(w[1].is_zero());
            }
        }
    }

    #[test]
    fn cone_matches_box_search(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 3), 1..6), strict in any::<bool>()) {
        let problem = ConeProblem::new(3, rows.clone(), strict).unwrap();
        let found = homogeneous_cone_feasibility(&problem, true).unwrap();
        if let Some(a) = &found {
            prop_assert_eq!(a.iter().sum::<i64>(), 0);
            prop_assert!(a.iter().any(|&x| x != 0));
            prop_assert!(problem.admits(a, true));
        }
        let mut boxed = None;
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let a = [x, y, -x - y];
                if a != [0, 0, 0] && problem.admits(&a, true) {
                    boxed = Some(a);
                }
            }
        }
        if boxed.is_some() {
            prop_assert!(found.is_some(), "box search found {:?}", boxed);
        }
    }

    #[test]
    fn inverse_and_determinant(k in 0usize..6, seed in prop::collection::vec((-20i64..20, -5i64..5), 9)) {
        let field = fields()[k];
        let m: Vec<Vec<FieldValue>> = (0..3).map(|i| (0..3).map(|j| element(field, seed[3 * i + j])).collect()).collect();
        let det = determinant(field, &m);
        prop_assert_eq!(det.is_zero(), rank(&m) < 3);
        if !det.is_zero() {
            let inv = inverse(field, &m).unwrap();
            let id = mat_mul(&m, &inv);
            for (i, row) in id.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    prop_assert_eq!(x.is_one(), i == j);
                    prop_assert_eq!(x.is_zero(), i != j);
                }
            }
        }
    }
}

#[test]
fn enumeration_lists_every_element_once() {
    for field in fields().into_iter().skip(1) {
        let all = enumerate_field(field).unwrap();
        let q = field.size().unwrap() as usize;
        assert_eq!(all.len(), q);
        let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), q);
        assert!(all[0].is_zero() && all[1].is_one());
    }
    assert_eq!(enumerate_field(Field::rationals()), Err(Error::InfiniteField));
}

#[test]
fn roots_of_unity_have_exact_order() {
    for field in fields().into_iter().skip(1) {
        let q = field.size().unwrap();
        for s in 1..q {
            match field.root_of_unity(s) {
                Some(z) => {
                    assert_eq!((q - 1) % s, 0);
                    assert!(z.pow(s).is_one());
                    assert!((1..s).all(|k| !z.pow(k).is_one()));
                }
                None => assert_ne!((q - 1) % s, 0),
            }
        }
    }
}

#[test]
fn embeddings_are_homomorphisms() {
    let f4 = Field::galois(2, 2).unwrap();
    let f16 = f4.extension_of_degree(2).unwrap();
    let e = f4.embedding_into(f16).unwrap();
    let all = enumerate_field(f4).unwrap();
    for a in &all {
        for b in &all {
            assert_eq!(e.apply(&(a * b)), &e.apply(a) * &e.apply(b));
            assert_eq!(e.apply(&(a + b)), &e.apply(a) + &e.apply(b));
        }
    }
    assert!(Field::galois(2, 3).unwrap().embedding_into(f16).is_err());
}
