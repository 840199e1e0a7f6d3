use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The operation is mathematically undefined for the given arguments
    /// (for example hyperangular quantities with fewer than three particles).
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("not a representation character: {0}")]
    NotARepresentation(String),

    /// An internal invariant broke; this always indicates a bug.
    #[error("algorithm violation: {0}")]
    AlgorithmViolation(String),

    #[error("no hard-core level found up to E = {ceiling_twice}/2 (rank {rank} requested, {found} available)")]
    SearchExhausted { ceiling_twice: u64, rank: u64, found: u64 },

    #[error("dimension guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
