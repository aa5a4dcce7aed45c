use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),
    #[error("size guard tripped: {terms} terms exceeds the limit of {limit}")]
    SizeGuard { terms: usize, limit: usize },
    #[error("signature mismatch: {0}")]
    Signature(String),
    #[error("degree mismatch: expected {expected}, got {got}")]
    Degree { expected: usize, got: usize },
    #[error("element is not linear in the module generators")]
    NotLinear,
    #[error("invalid cochain: {0}")]
    Cochain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
