use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded for {what}: {found} > {limit}")]
    Capacity {
        what: &'static str,
        found: usize,
        limit: usize,
    },

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("classification failed: {0}")]
    Classification(String),

    #[error("structure error: {0}")]
    Structure(String),

    #[error("correspondence failure: {0}")]
    Correspondence(String),

    #[error("isomorphism failure: {0}")]
    Isomorphism(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
