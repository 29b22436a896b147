use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or iteration hit its term cap before its stopping rule fired.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// Supplied coefficients do not match the shape a lemma requires.
    #[error("coefficient pattern violation: {0}")]
    PatternViolation(String),

    /// A sign decision could not be certified at the working precision.
    /// Never silently resolved; callers must treat this as a loud failure.
    #[error("indeterminate sign decision: {0}")]
    Indeterminate(String),

    /// Unknown claim, suite, sequence or bound-family name.
    #[error("unknown name: {0}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
