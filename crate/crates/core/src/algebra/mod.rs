//! Integer and rational linear algebra: exact rationals, integer matrices,
//! Smith normal form, negative continued fractions, and finitely presented
//! abelian groups.
//!
//! Matrix entries are stored as `i64` but every elimination runs on
//! arbitrary-precision integers internally, so coefficient growth can never
//! wrap. A result that does not fit back into `i64` is reported as
//! [`AlgebraError::Overflow`].

mod continued_fraction;
mod matrix;
mod presentation;
mod rational;
mod snf;

pub use continued_fraction::neg_continued_fraction;
pub use matrix::IntegerMatrix;
pub use presentation::{
    mapping_torus_h1, surgery_h1_s3, AbelianGroupPresentation, ClassInfo, GroupStructure,
};
pub use rational::Rational;
pub use snf::{smith_normal_form, SmithDecomposition};

use thiserror::Error;

/// Failure modes of the exact linear algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// A rational was constructed with denominator zero.
    #[error("denominator is zero")]
    ZeroDenominator,

    /// A matrix was built from entry data that does not match its shape.
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    /// Two operands have incompatible dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The operation needs a square matrix.
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    /// The operation needs a symmetric matrix.
    #[error("matrix is not symmetric at ({row},{col})")]
    NotSymmetric { row: usize, col: usize },

    /// The operation needs a 2x2 matrix.
    #[error("matrix is {rows}x{cols}, expected 2x2")]
    NotTwoByTwo { rows: usize, cols: usize },

    /// A monodromy matrix must have determinant one.
    #[error("determinant is {det}, expected 1")]
    DeterminantNotOne { det: String },

    /// Smith normal form is only defined for matrices with at least one entry.
    #[error("matrix has no entries")]
    EmptyMatrix,

    /// An exact intermediate value does not fit into `i64`.
    #[error("exact value {value} does not fit into 64 bits")]
    Overflow { value: String },

    /// Negative continued fractions are defined for r <= -1 only.
    #[error("continued fraction input {value} is not <= -1")]
    ContinuedFractionRange { value: String },

    /// A rational string was not of the form `p` or `p/q`.
    #[error("cannot parse {value:?} as a rational")]
    ParseRational { value: String },
}
