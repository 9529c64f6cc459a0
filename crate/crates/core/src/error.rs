use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    /// The automorphism search stored `cap` elements and stopped.
    #[error("automorphism group truncated at {cap} elements")]
    GroupTruncated { cap: usize },

    #[error("{what} exceeds cap: {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: String,
        cap: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A constructive step produced output that failed re-verification.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub fn cap(what: &'static str, size: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded {
            what,
            size: size.to_string(),
            cap: cap.to_string(),
        }
    }

    pub fn is_cap_overflow(&self) -> bool {
        matches!(self, Error::GroupTruncated { .. } | Error::CapExceeded { .. })
    }
}
