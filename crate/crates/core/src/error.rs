use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),

    #[error("interpolation needs at least one point")]
    NoPoints,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{what} is not an integer: {value}")]
    NonIntegral { what: String, value: String },

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("enumeration budget of {budget} visited states exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for `Err(Error::ParameterRange(..))`.
pub(crate) fn range_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::ParameterRange(msg.into()))
}
