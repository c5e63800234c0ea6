use std::collections::BTreeSet;
use std::fmt;

use super::homogeneous::HomogeneousPolynomial;
use super::matrix::{ProjectiveMatrix, ProjectivePoint};
use super::monomial::{binomial, Monomial};
use crate::algebra::{Field, FieldValue};
use crate::error::{Error, Result};

/// A degree-`d` self-map `(q_0 : ... : q_n)` of `P^n`, up to a common scalar.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMap {
    field: Field,
    n: usize,
    degree: u32,
    components: Vec<HomogeneousPolynomial>,
}

impl RationalMap {
    pub fn new(components: Vec<HomogeneousPolynomial>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::InvalidMap("no components".into()));
        };
        let field = first.field();
        let nvars = components.len();
        if nvars < 2 {
            return Err(Error::InvalidMap("a self-map of P^n needs at least two components".into()));
        }
        for c in &components {
            if c.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: c.nvars() });
            }
            if c.field() != field {
                return Err(Error::DescriptorMismatch);
            }
        }
        if components.iter().any(|c| c.degree() != first.degree()) {
            return Err(Error::MixedDegrees);
        }
        if components.iter().all(HomogeneousPolynomial::is_zero) {
            return Err(Error::AllZeroComponentVector);
        }
        if first.degree() == 0 {
            return Err(Error::InvalidMap("degree must be at least 1".into()));
        }
        Ok(RationalMap { field, n: nvars - 1, degree: first.degree(), components })
    }

    /// `(x_0^d : ... : x_n^d)`.
    pub fn power_map(field: Field, n: usize, d: u32) -> Self {
        let components = (0..=n)
            .map(|i| {
                let mut p = HomogeneousPolynomial::zero(field, n + 1, d);
                p.add_term(Monomial::pure_power(n + 1, i, d), field.one());
                p
            })
            .collect();
        RationalMap { field, n, degree: d, components }
    }

    /// Map whose coefficient of `(m, i)` is `c`; entries must have degree `d`.
    pub fn from_coefficients<I>(field: Field, n: usize, d: u32, coefficients: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((Monomial, usize), FieldValue)>,
    {
        let mut components: Vec<HomogeneousPolynomial> =
            (0..=n).map(|_| HomogeneousPolynomial::zero(field, n + 1, d)).collect();
        for ((m, i), c) in coefficients {
            if i > n || m.nvars() != n + 1 || m.degree() != d {
                return Err(Error::InvalidMap(format!("coefficient position ({m}, {i}) out of shape")));
            }
            components[i].add_term(m, c);
        }
        Self::new(components)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[HomogeneousPolynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &HomogeneousPolynomial {
        &self.components[i]
    }

    /// Projective dimension `N` of the space of degree-`d` maps on `P^n`.
    pub fn parameter_space_dimension(n: usize, d: u32) -> u64 {
        binomial(n as u64 + d as u64, d as u64) * (n as u64 + 1) - 1
    }

    pub fn coefficient(&self, m: &Monomial, i: usize) -> FieldValue {
        self.components[i].coefficient(m)
    }

    /// Pairs `(monomial, i)` with nonzero coefficient.
    pub fn coefficient_support(&self) -> BTreeSet<(Monomial, usize)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.terms().map(move |(m, _)| (m.clone(), i)))
            .collect()
    }

    /// Every coefficient position in canonical order: monomials largest
    /// first, then component index.
    pub fn positions(n: usize, d: u32) -> Vec<(Monomial, usize)> {
        Monomial::all_of_degree(n + 1, d)
            .into_iter()
            .flat_map(|m| (0..=n).map(move |i| (m.clone(), i)))
            .collect()
    }

    /// Dense coefficient vector in [`RationalMap::positions`] order.
    pub fn coefficient_vector(&self) -> Vec<FieldValue> {
        Self::positions(self.n, self.degree).iter().map(|(m, i)| self.coefficient(m, *i)).collect()
    }

    pub fn evaluate(&self, point: &[FieldValue]) -> Result<Vec<FieldValue>> {
        self.components.iter().map(|c| c.evaluate(point)).collect()
    }

    pub fn evaluate_point(&self, point: &ProjectivePoint) -> Result<Vec<FieldValue>> {
        self.evaluate(point.coords())
    }

    /// `phi(M x)`.
    pub fn substitute(&self, matrix: &ProjectiveMatrix) -> Result<Self> {
        self.check_matrix(matrix)?;
        let components =
            self.components.iter().map(|c| c.substitute(matrix.entries())).collect::<Result<Vec<_>>>()?;
        Ok(RationalMap { components, ..self.clone() })
    }

    /// `A phi`: the component vector multiplied by `A`.
    pub fn apply_on_left(&self, matrix: &ProjectiveMatrix) -> Result<Self> {
        self.check_matrix(matrix)?;
        let components = (0..=self.n)
            .map(|i| {
                let mut acc = HomogeneousPolynomial::zero(self.field, self.n + 1, self.degree);
                for j in 0..=self.n {
                    let a = matrix.entry(i, j);
                    if !a.is_zero() {
                        acc = acc.add(&self.components[j].scale(a));
                    }
                }
                acc
            })
            .collect();
        Ok(RationalMap { components, ..self.clone() })
    }

    /// `A phi A^{-1}`.
    pub fn conjugate(&self, matrix: &ProjectiveMatrix) -> Result<Self> {
        self.check_matrix(matrix)?;
        self.substitute(&matrix.inverse())?.apply_on_left(matrix)
    }

    fn check_matrix(&self, matrix: &ProjectiveMatrix) -> Result<()> {
        if matrix.size() != self.n + 1 {
            return Err(Error::DimensionMismatch { expected: self.n + 1, found: matrix.size() });
        }
        if matrix.field() != self.field {
            return Err(Error::DescriptorMismatch);
        }
        Ok(())
    }

    /// Coefficient vector scaled so its first nonzero entry is 1.
    pub fn normalized_coefficients(&self) -> Vec<FieldValue> {
        let v = self.coefficient_vector();
        let inv = v.iter().find(|x| !x.is_zero()).expect("nonzero map").inv().unwrap();
        v.iter().map(|x| x * &inv).collect()
    }

    /// The same map scaled so its first nonzero coefficient is 1.
    pub fn normalized(&self) -> Self {
        let v = self.coefficient_vector();
        let inv = v.iter().find(|x| !x.is_zero()).expect("nonzero map").inv().unwrap();
        self.scale(&inv)
    }

    pub fn scale(&self, c: &FieldValue) -> Self {
        RationalMap { components: self.components.iter().map(|p| p.scale(c)).collect(), ..self.clone() }
    }

    /// Multiply component `i` alone by `c`.
    pub fn scale_component(&self, i: usize, c: &FieldValue) -> Result<Self> {
        let mut components = self.components.clone();
        components[i] = components[i].scale(c);
        Self::new(components)
    }

    /// Reduce or embed coefficients into another field.
    pub fn coerce_into(&self, field: Field) -> Result<Self> {
        let components = self.components.iter().map(|c| c.coerce_into(field)).collect::<Result<Vec<_>>>()?;
        Self::new(components)
    }
}

/// Proportionality of coefficient vectors.
pub fn proj_equal(a: &RationalMap, b: &RationalMap) -> bool {
    a.field == b.field && a.n == b.n && a.degree == b.degree && a.normalized_coefficients() == b.normalized_coefficients()
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
