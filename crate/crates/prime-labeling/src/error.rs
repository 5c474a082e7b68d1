//! Error type shared by all fallible operations in this crate.

use alloc::string::String;
use core::fmt;

/// Why an operation could not produce a result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter lies outside the domain the operation accepts
    /// (wrong range, malformed structure, mismatched sizes, ...).
    InvalidParameter(String),
    /// The parameters are structurally valid but no labeling scheme is
    /// implemented for them.
    UnsupportedScheme(String),
    /// The requested object provably does not exist for these parameters,
    /// so no scheme could ever produce it.
    NotApplicable(String),
}

impl Error {
    /// Convenience constructor for [`Error::InvalidParameter`].
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// Convenience constructor for [`Error::UnsupportedScheme`].
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedScheme(msg.into())
    }

    /// Convenience constructor for [`Error::NotApplicable`].
    pub fn not_applicable(msg: impl Into<String>) -> Self {
        Error::NotApplicable(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::UnsupportedScheme(msg) => write!(f, "unsupported scheme: {msg}"),
            Error::NotApplicable(msg) => write!(f, "not applicable: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
