use thiserror::Error;

/// Errors produced while constructing or combining partitions, relations and distributions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("universe of size {size} exceeds the supported maximum of {max}")]
    UniverseTooLarge { size: usize, max: usize },
    #[error("element {element} appears in more than one block")]
    Overlap { element: usize },
    #[error("element {element} is not covered by any block")]
    Missing { element: usize },
    #[error("element {element} is outside the universe of size {size}")]
    OutOfRange { element: usize, size: usize },
    #[error("partition blocks must be non-empty")]
    EmptyBlock,
    #[error("universe mismatch: {left} vs {right} elements")]
    UniverseMismatch { left: usize, right: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("relation is not an equivalence relation: {0}")]
    NotEquivalence(&'static str),
    #[error("n = {n} exceeds the enumeration limit of {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("probability at index {index} is negative ({value})")]
    NegativeProbability { index: usize, value: f64 },
    #[error("probabilities sum to {sum}, not 1")]
    Normalization { sum: f64 },
    #[error("invalid distance matrix: {0}")]
    InvalidDistance(String),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("input must not be empty")]
    EmptyInput,
    #[error("unknown selector `{0}`")]
    UnknownSelector(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}
