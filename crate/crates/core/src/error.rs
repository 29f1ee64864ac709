use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("rational function has a pole at {0}")]
    Pole(String),
    #[error("exhaustion bound exceeded: {needed} codewords > bound {bound}; use a smaller instance")]
    ExhaustionBound { needed: u128, bound: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
