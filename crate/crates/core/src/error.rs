use thiserror::Error;

/// Errors raised while constructing or analyzing finite rings and modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    #[error("capacity exceeded: {what} needs {needed}, limit is {limit}")]
    CapacityExceeded {
        what: String,
        needed: usize,
        limit: usize,
    },

    #[error("not an ideal: {0}")]
    InvalidIdeal(String),

    #[error("module is defined over a different scalar ring")]
    ScalarMismatch,

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("element {0} has unbounded factorization length")]
    UnboundedElement(usize),

    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
}

impl Error {
    pub(crate) fn capacity(what: impl Into<String>, needed: usize, limit: usize) -> Self {
        Error::CapacityExceeded {
            what: what.into(),
            needed,
            limit,
        }
    }

    /// Stable machine-readable tag for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidConstruction(_) => "invalid_construction",
            Error::CapacityExceeded { .. } => "capacity_exceeded",
            Error::InvalidIdeal(_) => "invalid_ideal",
            Error::ScalarMismatch => "scalar_mismatch",
            Error::InvalidQuery(_) => "invalid_query",
            Error::UnboundedElement(_) => "unbounded_element",
            Error::Parse { .. } => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
