use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid ordered set partition: {0}")]
    InvalidSetPartition(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("negative entry {0} in weak composition")]
    NegativeEntry(i64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("not a valid point of Z_{{n,k}}: {0}")]
    NotInPointSet(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
