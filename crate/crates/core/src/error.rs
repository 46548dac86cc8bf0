use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed factorization: {0}")]
    MalformedFactorization(String),

    /// A request that would enumerate more than the configured limit.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("{0}")]
    OutOfRange(String),

    #[error("reference data: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
