use thiserror::Error;

/// Errors raised by the algebra kernel and the curve constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different rings, or a matrix is not square.
    #[error("structural mismatch: {0}")]
    Structural(String),
    /// The operation is undefined for this input (zero polynomial, non-Artinian ideal, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A documented precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An index parameter is outside its admissible range.
    #[error("parameter out of range: {0}")]
    Range(String),
    /// An internally asserted mathematical claim failed.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
