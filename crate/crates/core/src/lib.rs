//! Exact computations on degree-d rational self-maps of projective space:
//! morphism tests via Macaulay resultants, Hilbert–Mumford stability, stabilizer
//! groups, and the fixed-point divisor machinery on the projective line.

pub mod algebra;
pub mod error;
pub mod fixmap;
pub mod git;
pub mod parse;
pub mod poly;
pub mod resultant;
pub mod stab;

pub use error::{Error, Result};
