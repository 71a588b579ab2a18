use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Core(#[from] stablerep::Error),
    #[error("tensor space of dimension {dim} exceeds the limit {limit}")]
    TooLarge { dim: u128, limit: u64 },
    #[error("{0}")]
    Domain(String),
    #[error("inconsistent module: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = OracleError> = std::result::Result<T, E>;
