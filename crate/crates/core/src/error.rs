use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("loop rejected at vertex {0}")]
    LoopRejected(usize),
    #[error("graph on {0} vertices exceeds the 32-vertex limit")]
    SizeLimit(usize),
    #[error("graph6 cannot encode {0} vertices with a single size byte")]
    UnsupportedSize(usize),
    #[error("malformed graph6: {0}")]
    Malformed(String),
    #[error("scan over {classes} pair orbits exceeds the cap of {cap}")]
    ScanTooLarge { classes: usize, cap: usize },
    #[error("census inconsistency: {0}")]
    CensusInconsistency(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("{0} is undefined for this graph")]
    Undefined(&'static str),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
