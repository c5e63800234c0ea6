use std::collections::BTreeMap;
use std::fmt;

use super::monomial::Monomial;
use crate::algebra::{Field, FieldValue};
use crate::error::{Error, Result};

/// Homogeneous form of fixed degree; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousPolynomial {
    field: Field,
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, FieldValue>,
}

impl HomogeneousPolynomial {
    pub fn zero(field: Field, nvars: usize, degree: u32) -> Self {
        HomogeneousPolynomial { field, nvars, degree, terms: BTreeMap::new() }
    }

    /// Sums repeated monomials; rejects monomials of the wrong shape.
    pub fn from_terms<I>(field: Field, nvars: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, FieldValue)>,
    {
        let mut p = Self::zero(field, nvars, degree);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: m.nvars() });
            }
            if m.degree() != degree {
                return Err(Error::InvalidMap(format!("monomial {m} does not have degree {degree}")));
            }
            if c.field() != field {
                return Err(Error::DescriptorMismatch);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// `c * x_i`.
    pub fn variable(field: Field, nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(field, nvars, 1);
        p.add_term(Monomial::pure_power(nvars, i, 1), field.one());
        p
    }

    /// Linear form `sum_j coeffs[j] x_j`.
    pub fn linear(field: Field, coeffs: &[FieldValue]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(field, n, 1);
        for (j, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::pure_power(n, j, 1), c.clone());
        }
        p
    }

    pub fn constant(field: Field, nvars: usize, c: FieldValue) -> Self {
        let mut p = Self::zero(field, nvars, 0);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: FieldValue) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = &*existing + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldValue {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero terms, largest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldValue)> {
        self.terms.iter().rev()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest monomial with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &FieldValue)> {
        self.terms.iter().next_back()
    }

    /// Coefficients of every degree-`d` monomial, largest monomial first.
    pub fn dense_coefficients(&self) -> Vec<FieldValue> {
        Monomial::all_of_degree(self.nvars, self.degree).iter().map(|m| self.coefficient(m)).collect()
    }

    pub fn scale(&self, c: &FieldValue) -> Self {
        let mut p = Self::zero(self.field, self.nvars, self.degree);
        for (m, x) in &self.terms {
            p.add_term(m.clone(), x * c);
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nvars, self.degree), (other.nvars, other.degree), "shape mismatch");
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "shape mismatch");
        let mut p = Self::zero(self.field, self.nvars, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                p.add_term(m1.mul(m2), c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.field, self.nvars, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient by a monomial-free divisor, if the division is exact.
    pub fn divide(&self, divisor: &Self) -> Option<Self> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        let lead_inv = lead_c.inv().ok()?;
        let qdeg = self.degree.checked_sub(divisor.degree)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.field, self.nvars, qdeg);
        while let Some((m, c)) = rem.leading_term() {
            let q = lead_m.quotient_of(m)?;
            let coeff = c * &lead_inv;
            let mut step = Self::zero(self.field, self.nvars, qdeg);
            step.add_term(q, coeff);
            rem = rem.sub(&divisor.mul(&step));
            quot = quot.add(&step);
        }
        Some(quot)
    }

    pub fn evaluate(&self, point: &[FieldValue]) -> Result<FieldValue> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: point.len() });
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &x.pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `q(M x)`: each variable `x_i` becomes `sum_j M[i][j] x_j`.
    pub fn substitute(&self, matrix: &[Vec<FieldValue>]) -> Result<Self> {
        if matrix.len() != self.nvars || matrix.iter().any(|r| r.len() != self.nvars) {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: matrix.len() });
        }
        let forms: Vec<Self> = matrix.iter().map(|row| Self::linear(self.field, row)).collect();
        let mut powers: Vec<Vec<Self>> = forms
            .iter()
            .map(|f| vec![Self::constant(self.field, self.nvars, self.field.one()), f.clone()])
            .collect();
        let mut out = Self::zero(self.field, self.nvars, self.degree);
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.field, self.nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Same form with coefficients mapped into another field.
    pub fn map_coefficients<F>(&self, field: Field, mut f: F) -> Result<Self>
    where
        F: FnMut(&FieldValue) -> Result<FieldValue>,
    {
        let mut p = Self::zero(field, self.nvars, self.degree);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c)?);
        }
        Ok(p)
    }

    /// Coerce coefficients (a rational reduced mod p, or a field embedding).
    pub fn coerce_into(&self, field: Field) -> Result<Self> {
        self.map_coefficients(field, |c| c.coerce_into(field))
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let finite_ext = self.field.degree() > 1;
        let mut first = true;
        for (m, c) in self.terms() {
            let mut coeff = c.to_string();
            let negative = !finite_ext && coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if finite_ext && coeff.contains('+') {
                coeff = format!("({coeff})");
            }
            let body = match (coeff.as_str(), m.degree()) {
                (_, 0) => coeff.clone(),
                ("1", _) => m.to_string(),
                _ => format!("{coeff}*{m}"),
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: Field, terms: &[(i64, [u32; 2])]) -> HomogeneousPolynomial {
        let d = terms[0].1.iter().sum();
        HomogeneousPolynomial::from_terms(
            field,
            2,
            d,
            terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), field.from_i64(*c))),
        )
        .unwrap()
    }

    fn matrix(field: Field, rows: [[i64; 2]; 2]) -> Vec<Vec<FieldValue>> {
        rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()
    }

    #[test]
    fn evaluation() {
        let q = Field::rationals();
        let p = poly(q, &[(1, [2, 0]), (1, [0, 2])]);
        assert!(p.evaluate(&[q.one(), q.zero()]).unwrap().is_one());
        let f2 = Field::prime(2).unwrap();
        let p2 = poly(f2, &[(1, [2, 0]), (1, [0, 2])]);
        assert!(p2.evaluate(&[f2.one(), f2.one()]).unwrap().is_zero());
        assert!(matches!(p.evaluate(&[q.one()]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn substitution_examples() {
        let q = Field::rationals();
        let x2 = poly(q, &[(1, [2, 0])]);
        assert_eq!(x2.substitute(&matrix(q, [[0, 1], [1, 0]])).unwrap(), poly(q, &[(1, [0, 2])]));
        let p = poly(q, &[(1, [2, 0]), (1, [1, 1])]);
        let shear = matrix(q, [[1, 1], [0, 1]]);
        assert_eq!(
            p.substitute(&shear).unwrap(),
            poly(q, &[(1, [2, 0]), (3, [1, 1]), (2, [0, 2])])
        );
        let f2 = Field::prime(2).unwrap();
        let x2 = poly(f2, &[(1, [2, 0])]);
        assert_eq!(
            x2.substitute(&matrix(f2, [[1, 1], [0, 1]])).unwrap(),
            poly(f2, &[(1, [2, 0]), (1, [0, 2])])
        );
    }

    #[test]
    fn exact_division() {
        let q = Field::rationals();
        let p = poly(q, &[(1, [3, 0]), (-1, [0, 3])]);
        let g = poly(q, &[(1, [1, 0]), (-1, [0, 1])]);
        let quot = p.divide(&g).unwrap();
        assert_eq!(quot, poly(q, &[(1, [2, 0]), (1, [1, 1]), (1, [0, 2])]));
        assert!(p.divide(&poly(q, &[(1, [1, 0])])).is_none());
    }

    #[test]
    fn display() {
        let q = Field::rationals();
        let p = poly(q, &[(1, [2, 0]), (-3, [1, 1]), (2, [0, 2])]);
        assert_eq!(p.to_string(), "x^2 - 3*x*y + 2*y^2");
    }
}
