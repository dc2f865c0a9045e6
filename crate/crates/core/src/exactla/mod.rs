//! Exact scalars, dense matrices, canonical subspaces and univariate polynomials.

mod echelon;
mod mat;
mod scalar;
mod subspace;
pub mod upoly;
pub mod vector;

pub use echelon::Echelon;
pub use mat::{rref, solve_linear, Mat};
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
pub use upoly::UPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}
