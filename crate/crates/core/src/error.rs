use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subspace not contained: {0}")]
    NotContained(String),
    #[error("{what}: expected dimension {expected}, computed {computed}")]
    UnexpectedDimension { what: String, expected: usize, computed: usize },
    #[error("point is not on the Cayley plane: {0}")]
    NotOnVariety(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("sampling did not stabilize: {0}")]
    Unstable(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("matrix is singular")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
