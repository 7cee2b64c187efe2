use thiserror::Error;

/// Errors surfaced by the exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("coordinate {coord} out of range for n = {n}")]
    CoordinateOutOfRange { coord: usize, n: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("size cap exceeded: n = {n} > cap {cap} (pass the override flag to force)")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("unsupported alphabet size k = {0} for exact entries (only k = 2)")]
    UnsupportedAlphabet(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
