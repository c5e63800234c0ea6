//! Binary forms `f(x, y)`: gcd and roots on `P^1`.

use super::homogeneous::HomogeneousPolynomial;
use super::matrix::ProjectivePoint;
use super::monomial::Monomial;
use super::univariate;
use crate::algebra::{Field, FieldValue};
use crate::error::{Error, Result};

/// Splits `f = y^k g` with `y` not dividing `g`; returns `k` and `g(x, 1)`.
fn dehomogenize(f: &HomogeneousPolynomial) -> (u32, Vec<FieldValue>) {
    let k = f.terms().map(|(m, _)| m.exponents()[1]).min().unwrap_or(0);
    let deg = (f.degree() - k) as usize;
    let mut coeffs = vec![f.field().zero(); deg + 1];
    for (m, c) in f.terms() {
        coeffs[m.exponents()[0] as usize] = c.clone();
    }
    (k, coeffs)
}

/// `y^k h(x, y)` where `h` homogenizes `g` to its own degree.
fn homogenize(field: Field, k: u32, g: &[FieldValue]) -> HomogeneousPolynomial {
    let deg = univariate::degree(g).unwrap_or(0) as u32;
    let terms = g
        .iter()
        .enumerate()
        .take(deg as usize + 1)
        .map(|(i, c)| (Monomial::new(vec![i as u32, deg - i as u32 + k]), c.clone()));
    HomogeneousPolynomial::from_terms(field, 2, deg + k, terms).expect("well-formed terms")
}

fn check_binary(f: &HomogeneousPolynomial) -> Result<()> {
    if f.nvars() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: f.nvars() });
    }
    Ok(())
}

/// Monic homogeneous gcd; the leading (largest graded-lex) coefficient is 1.
pub fn binary_gcd(p: &HomogeneousPolynomial, q: &HomogeneousPolynomial) -> Result<HomogeneousPolynomial> {
    check_binary(p)?;
    check_binary(q)?;
    let field = p.field();
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::BadParameter("gcd of two zero forms".into())),
        (false, true) => return Ok(make_monic(p)),
        (true, false) => return Ok(make_monic(q)),
        _ => {}
    }
    let (kp, fp) = dehomogenize(p);
    let (kq, fq) = dehomogenize(q);
    let g = univariate::gcd(&fp, &fq, field);
    Ok(homogenize(field, kp.min(kq), &g))
}

fn make_monic(f: &HomogeneousPolynomial) -> HomogeneousPolynomial {
    let lead = f.leading_term().expect("nonzero form").1.inv().unwrap();
    f.scale(&lead)
}

/// Distinct roots of a nonzero binary form in `P^1` of its coefficient field.
pub fn binary_roots(f: &HomogeneousPolynomial) -> Result<Vec<ProjectivePoint>> {
    check_binary(f)?;
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let field = f.field();
    let (_, g) = dehomogenize(f);
    let mut out = Vec::new();
    if f.coefficient(&Monomial::pure_power(2, 0, f.degree())).is_zero() {
        out.push(ProjectivePoint::new(vec![field.one(), field.zero()])?);
    }
    for r in univariate::roots(&g, field)? {
        out.push(ProjectivePoint::new(vec![r, field.one()])?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(field: Field, terms: &[(i64, [u32; 2])]) -> HomogeneousPolynomial {
        let d = terms[0].1.iter().sum();
        HomogeneousPolynomial::from_terms(
            field,
            2,
            d,
            terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), field.from_i64(*c))),
        )
        .unwrap()
    }

    #[test]
    fn gcd_examples() {
        let q = Field::rationals();
        let cubic = form(q, &[(1, [2, 1]), (-1, [1, 2])]);
        let xy = form(q, &[(1, [1, 1])]);
        assert_eq!(binary_gcd(&cubic, &xy).unwrap(), xy);
        let sum = form(q, &[(1, [2, 0]), (1, [0, 2])]);
        assert_eq!(binary_gcd(&sum, &xy).unwrap().degree(), 0);
        let zero = HomogeneousPolynomial::zero(q, 2, 2);
        let p = form(q, &[(3, [2, 0]), (6, [0, 2])]);
        assert_eq!(binary_gcd(&p, &zero).unwrap(), form(q, &[(1, [2, 0]), (2, [0, 2])]));
    }

    #[test]
    fn gcd_in_characteristic_two() {
        let f2 = Field::prime(2).unwrap();
        let sum = form(f2, &[(1, [2, 0]), (1, [0, 2])]);
        let xy = form(f2, &[(1, [1, 1])]);
        assert_eq!(binary_gcd(&sum, &xy).unwrap().degree(), 0);
        let xy_plus = form(f2, &[(1, [2, 0]), (1, [1, 1])]);
        assert_eq!(binary_gcd(&sum, &xy_plus).unwrap(), form(f2, &[(1, [1, 0]), (1, [0, 1])]));
    }

    #[test]
    fn roots_include_infinity() {
        let q = Field::rationals();
        let f = form(q, &[(1, [2, 1]), (-1, [1, 2])]); // xy(x - y)
        let shown: Vec<String> = binary_roots(&f).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown.len(), 3);
        for s in ["(1:0)", "(0:1)", "(1:1)"] {
            assert!(shown.iter().any(|x| x == s), "{s} missing from {shown:?}");
        }
    }
}
