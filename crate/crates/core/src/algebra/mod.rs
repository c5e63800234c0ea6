//! Exact scalars, integer matrices and the linear-feasibility kernel.

pub mod cone;
pub mod field;
pub(crate) mod fp_poly;
pub mod linalg;
pub mod matrix;
pub mod snf;

pub use cone::{homogeneous_cone_feasibility, ConeProblem};
pub use field::{enumerate_field, field_arith, ArithOp, Embedding, Field, FieldDescriptor, FieldValue};
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithForm};
