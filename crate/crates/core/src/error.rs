use thiserror::Error;

/// Errors raised by series, matrix, and constant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has a zero constant term; it has no reciprocal")]
    ZeroConstantTerm,

    #[error("series has a nonzero constant term (coefficient 0); it cannot be substituted or acted on")]
    NonzeroConstantTerm,

    #[error("series is not invertible under composition: coefficient {index} {reason}")]
    NotInK { index: usize, reason: &'static str },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("truncation order {available} is too small; at least {required} is needed")]
    InsufficientOrder { required: usize, available: usize },

    #[error("identity check failed: {0}")]
    IdentityViolated(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error at index {index}: {message}")]
    Parse { index: usize, message: String },

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
