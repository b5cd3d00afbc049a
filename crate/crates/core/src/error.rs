use alloc::string::String;

/// Everything that can go wrong in the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid polynomial variables: {0}")]
    InvalidVariables(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("value does not belong to the ring")]
    NotInRing,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("ring is infinite and cannot be enumerated")]
    InfiniteRing,
    #[error("operation requires {0}")]
    UnsupportedRing(&'static str),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("column span is not free of full rank (no unit maximal minor)")]
    NotFree,
    #[error("power {power} out of range: {reason}")]
    PowerOutOfRange { power: usize, reason: &'static str },
    #[error("empty list of factors")]
    EmptyProduct,
    #[error("multinomial parts sum to {sum}, expected {top}")]
    MultinomialMismatch { top: u64, sum: i128 },
    #[error("inexact division")]
    InexactDivision,
    #[error("symmetric-power image is not a free direct summand (m = 1 with r not invertible)")]
    DegenerateImage,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
