use thiserror::Error;

use crate::series::SeriesVar;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact polynomial division, remainder {remainder}")]
    InexactDivision { remainder: String },

    #[error("series variable mismatch: {left} vs {right}")]
    VariableMismatch { left: SeriesVar, right: SeriesVar },

    #[error("constant term {0} is not invertible")]
    NonInvertibleConstant(String),

    #[error("series must vanish at 0, constant term is {0}")]
    NonZeroConstant(String),

    #[error("log requires constant term 1, got {0}")]
    LogConstant(String),

    #[error("reversion requires f(0) = 0 and an invertible linear coefficient")]
    NotReversible,

    #[error("coefficient of x^{index} has degree {degree} in {var}, exceeding {index}")]
    DegreeOverflow { index: usize, degree: u32, var: char },

    #[error("coefficient of x^{index} is not polynomial in {var}")]
    NonPolynomialCoefficient { index: usize, var: char },

    #[error("triangle is not invertible: diagonal entry of row {row} is zero")]
    NotInvertible { row: usize },

    #[error("requested depth {requested} exceeds the available window of {available}")]
    DepthExceeded { requested: usize, available: usize },

    #[error("continued fraction is not generic: lambda_{index} vanishes")]
    NonGeneric { index: usize },

    #[error("J-fraction does not follow the affine/quadratic pattern at index {index}")]
    PatternViolation { index: usize },

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("indices out of range: ({n}, {k})")]
    IndexOutOfRange { n: i64, k: i64 },

    #[error("incompatible Riordan array kinds")]
    KindMismatch,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Precondition(String),
}
