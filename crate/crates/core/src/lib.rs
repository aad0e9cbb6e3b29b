//! Exact-arithmetic workbench for Matsuo algebras, Fischer spaces and
//! 3-transposition groups.

pub mod algebra;
pub mod constructions;
pub mod fischer;
pub mod groups;
pub mod linalg;
pub mod scalar;

pub use linalg::{LinalgError, Matrix, Subspace, Vector};
pub use scalar::{FieldError, FieldSpec, Scalar};
