//! Pieces of the `listdist` binary that are worth testing on their own:
//! input handling, the report builders and the property suites.

pub mod hunt;
pub mod input;
pub mod invariants;
pub mod suites;

use listdist::Error;
use serde_json::json;

/// Process exit status for a library error.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::InvalidGraph(_) | Error::InvalidFamily(_) | Error::InvalidInput(_) => 2,
        Error::GroupTruncated { .. } | Error::CapExceeded { .. } => 3,
        Error::Internal(_) => 1,
    }
}

/// The JSON object printed on stdout when a command fails.
pub fn error_json(err: &Error) -> serde_json::Value {
    let kind = match err {
        Error::Parse { .. } => "parse",
        Error::InvalidGraph(_) => "invalid_graph",
        Error::InvalidFamily(_) => "invalid_family",
        Error::InvalidInput(_) => "invalid_input",
        Error::GroupTruncated { .. } => "group_truncated",
        Error::CapExceeded { .. } => "cap_exceeded",
        Error::Internal(_) => "internal",
    };
    json!({ "error": { "kind": kind, "message": err.to_string() } })
}
