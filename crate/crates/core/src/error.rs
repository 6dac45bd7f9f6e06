use thiserror::Error;

/// Errors produced by the irrtools core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated a mathematical precondition (size below a family
    /// minimum, a sequence that is not realizable, an empty search class, ...).
    #[error("{0}")]
    Domain(String),

    /// A bound or operation needed a quantity the caller did not supply.
    #[error("missing input `{field}`: {reason}")]
    MissingInput { field: &'static str, reason: String },

    /// Malformed text input, with a 1-based line number.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A search exceeded the configured size cap.
    #[error(
        "n = {n} exceeds the enumeration cap of {cap}; raise it with --max-n or IRRTOOLS_MAX_N"
    )]
    CapExceeded { n: usize, cap: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn missing(field: &'static str, reason: impl Into<String>) -> Self {
        Error::MissingInput {
            field,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
