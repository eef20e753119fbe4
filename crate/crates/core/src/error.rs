//! Error type shared across the crate.

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A value violates a precondition (bad index, dimension mismatch, ...).
    InvalidInput(String),
    /// An operation is not defined for the given state (e.g. CZ with n < 2).
    InvalidOperation(String),
    /// A text format could not be parsed; `line` is 1-based.
    Parse { line: usize, message: String },
    /// The request would exceed a hard resource guard (matrix too large, ...).
    Resource(String),
}

impl Error {
    pub fn invalid_input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn invalid_op(msg: impl Into<String>) -> Self {
        Error::InvalidOperation(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::InvalidOperation(msg) => write!(f, "invalid operation: {msg}"),
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::Resource(msg) => write!(f, "resource limit: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
