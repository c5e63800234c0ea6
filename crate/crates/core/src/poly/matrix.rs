use std::fmt;

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{Field, FieldValue};
use crate::error::{Error, Result};

/// Invertible square matrix, considered up to a nonzero scalar.
///
/// Equality and hashing use the canonical representative whose first nonzero
/// entry (row-major) is 1.
#[derive(Clone)]
pub struct ProjectiveMatrix {
    field: Field,
    entries: Matrix,
}

impl ProjectiveMatrix {
    pub fn new(field: Field, entries: Matrix) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if let Some(r) = entries.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: r.len() });
        }
        if entries.iter().flatten().any(|x| x.field() != field) {
            return Err(Error::DescriptorMismatch);
        }
        if linalg::determinant(field, &entries).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(ProjectiveMatrix { field, entries }.canonical())
    }

    pub fn from_integers(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(field, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect())
    }

    pub fn identity(field: Field, size: usize) -> Self {
        ProjectiveMatrix { field, entries: linalg::identity(field, size) }
    }

    pub fn diagonal(field: Field, diag: &[FieldValue]) -> Result<Self> {
        let n = diag.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { diag[i].clone() } else { field.zero() }).collect())
            .collect();
        Self::new(field, entries)
    }

    /// `P e_j = e_{sigma(j)}`.
    pub fn permutation(field: Field, sigma: &[usize]) -> Self {
        let n = sigma.len();
        let mut entries = linalg::zero_matrix(field, n, n);
        for (j, &s) in sigma.iter().enumerate() {
            entries[s][j] = field.one();
        }
        ProjectiveMatrix { field, entries }
    }

    /// Coordinate swap on `P^1`.
    pub fn swap(field: Field) -> Self {
        Self::permutation(field, &[1, 0])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldValue {
        &self.entries[i][j]
    }

    pub fn determinant(&self) -> FieldValue {
        linalg::determinant(self.field, &self.entries)
    }

    pub fn mul(&self, other: &Self) -> Self {
        ProjectiveMatrix { field: self.field, entries: linalg::mat_mul(&self.entries, &other.entries) }.canonical()
    }

    pub fn inverse(&self) -> Self {
        let inv = linalg::inverse(self.field, &self.entries).expect("projective matrices are invertible");
        ProjectiveMatrix { field: self.field, entries: inv }.canonical()
    }

    pub fn apply(&self, v: &[FieldValue]) -> Vec<FieldValue> {
        linalg::mat_vec(&self.entries, v)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.field, self.size())
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| i == j || self.entries[i][j].is_zero()))
    }

    fn canonical(mut self) -> Self {
        let first = self.entries.iter().flatten().find(|x| !x.is_zero()).cloned();
        if let Some(c) = first.filter(|c| !c.is_one()) {
            let inv = c.inv().unwrap();
            for x in self.entries.iter_mut().flatten() {
                *x = &*x * &inv;
            }
        }
        self
    }

    /// Entries of the canonical representative in row-major order.
    pub fn row_major_strings(&self) -> Vec<String> {
        self.entries.iter().flatten().map(FieldValue::to_string).collect()
    }

    /// The same matrix over another field.
    pub fn coerce_into(&self, field: Field) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.coerce_into(field)).collect::<Result<Vec<_>>>())
            .collect::<Result<Matrix>>()?;
        Self::new(field, entries)
    }
}

impl PartialEq for ProjectiveMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.entries == other.entries
    }
}

impl Eq for ProjectiveMatrix {}

impl std::hash::Hash for ProjectiveMatrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl fmt::Debug for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(FieldValue::to_string).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Point of projective space, normalized so its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<FieldValue>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<FieldValue>) -> Result<Self> {
        let Some(first) = coords.iter().find(|x| !x.is_zero()) else {
            return Err(Error::BadParameter("projective point with all coordinates zero".into()));
        };
        let inv = first.inv()?;
        Ok(ProjectivePoint { coords: coords.iter().map(|x| x * &inv).collect() })
    }

    pub fn coords(&self) -> &[FieldValue] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    /// Every point of `P^n(F)` for a finite field `F`.
    pub fn enumerate(field: Field, n: usize) -> Result<Vec<ProjectivePoint>> {
        let elements = field.enumerate()?;
        let mut out = Vec::new();
        for lead in 0..=n {
            // Coordinates before `lead` are zero, `lead` is one, the rest free.
            let free = n - lead;
            let q = elements.len();
            let total = q.checked_pow(free as u32).ok_or(Error::Overflow)?;
            for mut idx in 0..total {
                let mut coords = vec![field.zero(); n + 1];
                coords[lead] = field.one();
                for slot in coords.iter_mut().skip(lead + 1) {
                    *slot = elements[idx % q].clone();
                    idx /= q;
                }
                out.push(ProjectivePoint { coords });
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(FieldValue::to_string).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
