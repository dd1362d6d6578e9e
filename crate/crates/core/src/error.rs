use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An exhaustive routine was asked to work beyond its configured size.
    #[error("{what}: {actual} exceeds cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    /// Malformed textual input; `token` is the first offending token.
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A numeric argument fell outside the domain of the formula.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("sub-embedding failed in copy {copy}")]
    SubEmbedding { copy: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

/// Checks `actual <= limit`, producing [`Error::CapExceeded`] otherwise.
pub(crate) fn ensure_cap(what: &'static str, actual: u64, limit: u64) -> Result<()> {
    if actual > limit {
        Err(Error::CapExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
