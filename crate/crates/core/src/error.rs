//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configured resource budget (memory, divisor pairs, scan size) would
    /// be exceeded.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// A prime-power-table spec is missing an entry needed for evaluation.
    #[error("incomplete spec: no value for prime power {p}^{k}")]
    IncompleteSpec { p: u64, k: u32 },

    /// A frequency was requested over an empty population.
    #[error("empty population: {0}")]
    EmptyPopulation(String),

    /// Two evaluation routes of the same quantity disagree beyond the
    /// documented tolerance.
    #[error("numerical inconsistency: {context}: {lhs} vs {rhs} (tolerance {tolerance})")]
    NumericalInconsistency {
        context: String,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
    },

    /// Sieve cache file is malformed or does not match the requested limit.
    #[error("cache format: {0}")]
    CacheFormat(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
}
