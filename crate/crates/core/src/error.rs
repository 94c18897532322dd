//! Crate-wide error type.
//!
//! Variants are grouped so the CLI can map them onto its exit-code
//! contract: data problems (bad input files, schema mismatches, missing
//! data) exit with 2, numerical failures (non-finite objectives, singular
//! systems, estimates outside their domain) exit with 3.

use std::path::PathBuf;

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A single malformed line in a pagecounts dump. Recoverable: the
    /// surrounding file keeps processing and the error is tallied.
    #[error("line {line}: {reason}")]
    MalformedLine { line: u64, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {reason}")]
    BadFile { path: PathBuf, reason: String },

    #[error("schedule: {0}")]
    BadSchedule(String),

    #[error("artifact schema mismatch: expected {expected}, found {found}")]
    SchemaMismatch { expected: String, found: String },

    #[error("invalid {what}: {reason}")]
    InvalidInput { what: String, reason: String },

    #[error("numerical failure in {op}: {reason}")]
    Numerical { op: String, reason: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn invalid(what: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidInput {
            what: what.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn numerical(op: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Numerical {
            op: op.into(),
            reason: reason.into(),
        }
    }

    /// Exit code the CLI should use for this error: 2 for data problems,
    /// 3 for numerical failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Numerical { .. } => 3,
            _ => 2,
        }
    }
}
