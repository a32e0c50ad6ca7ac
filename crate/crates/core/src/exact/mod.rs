//! Exact linear algebra over `Q` and real quadratic fields `Q(√D)`.
//!
//! Nothing in this module touches floating point. Matrices hold integer
//! numerators over one shared denominator; eigenvalues are rationals or
//! quadratic irrationals; eigenprojections are matrices over `Q(√D)`.

mod charpoly;
mod matrix;
mod poly;
pub(crate) mod scalar;
mod spectrum;
mod surd;

use num_bigint::BigInt;
use thiserror::Error;

pub use charpoly::char_poly;
pub use matrix::ExactMatrix;
pub use poly::Polynomial;
pub use scalar::ExactScalar;
pub use spectrum::{
    eigenprojection, exact_spectrum, mat_poly_eval, Eigenvalue, SpectralDecomposition, SpectrumReport,
};
pub use surd::SurdMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("matrix is {rows}×{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left:?} against {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix has non-integer entries")]
    NonIntegerEntries,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("characteristic polynomial has an irreducible factor of degree {degree} (eigenvalues outside Q and Q(√D))")]
    IrreducibleFactor { degree: usize },
    #[error("values from Q(√{0}) and Q(√{1}) cannot be combined")]
    MixedFields(BigInt, BigInt),
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} is negative")]
    NegativeRadicand(BigInt),
    #[error("radicand {0} is not a square-free integer greater than 1")]
    InvalidRadicand(BigInt),
}
