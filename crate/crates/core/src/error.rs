use thiserror::Error;

/// Errors produced by the library.
///
/// Variants map onto the failure kinds callers need to distinguish: bad
/// configuration or arguments, out-of-scope requests, and genuine
/// verification failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported configuration: {0}")]
    Configuration(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid word: {0}")]
    Word(String),

    #[error("classification failed: {0}")]
    Classification(String),

    #[error("invalid Cayley transform: {0}")]
    Transform(String),

    #[error("not available for family {family}: {reason}")]
    Family { family: String, reason: String },

    #[error("parameters are not comparable: {0}")]
    Comparison(String),

    #[error("resource cap exceeded: {what} exceeded {cap}")]
    Resource { what: String, cap: usize },

    #[error("outside the supported scope: {0}")]
    Scope(String),

    #[error("count bounds disagree: upper bound {upper}, lower bound {lower}")]
    Counting { upper: usize, lower: usize },

    #[error("certificate mismatch at step {step}: {detail}")]
    Certificate { step: usize, detail: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("theorem check `{check}` failed: {detail}")]
    TheoremCheck { check: String, detail: String },
}

impl Error {
    /// True for errors that signal a failed verification rather than a bad
    /// request.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::Counting { .. }
                | Error::Certificate { .. }
                | Error::Consistency(_)
                | Error::TheoremCheck { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
