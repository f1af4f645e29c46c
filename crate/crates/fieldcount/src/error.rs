//! Error type shared across the crate.
//!
//! The short message strings on the first six variants are stable API:
//! callers and the command-line tool match on them.

use thiserror::Error;

/// Errors produced by crate operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Factorization or root-finding was asked for the zero polynomial.
    #[error("zero input")]
    ZeroInput,

    /// A group element with non-invertible determinant was applied.
    #[error("singular group element")]
    SingularGroupElement,

    /// A degree outside the supported range was requested.
    #[error("unsupported degree")]
    UnsupportedDegree,

    /// A form with vanishing discriminant was passed where a nondegenerate
    /// one is required.
    #[error("degenerate form")]
    DegenerateForm,

    /// A pair of ternary quadratic forms with vanishing discriminant was
    /// passed where a nondegenerate pair is required.
    #[error("degenerate pair")]
    DegeneratePair,

    /// The tame enumeration was asked about a residue characteristic that
    /// divides one of the possible ramification indices.
    #[error("wild ramification out of scope")]
    WildRamification,

    /// Invalid configuration or argument (message explains which).
    #[error("{0}")]
    Invalid(String),

    /// A computation exceeded its declared budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// Input text could not be parsed (message points at the offending part).
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Convenience constructor for [`Error::Invalid`].
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// Convenience constructor for [`Error::Budget`].
    pub fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }

    /// Convenience constructor for [`Error::Parse`].
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
