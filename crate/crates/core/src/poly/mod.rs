//! Monomials, homogeneous forms, projective matrices and rational self-maps.

pub mod binary;
pub mod homogeneous;
pub mod map;
pub mod matrix;
pub mod monomial;
pub mod univariate;

pub use binary::{binary_gcd, binary_roots};
pub use homogeneous::HomogeneousPolynomial;
pub use map::{proj_equal, RationalMap};
pub use matrix::{ProjectiveMatrix, ProjectivePoint};
pub use monomial::Monomial;
