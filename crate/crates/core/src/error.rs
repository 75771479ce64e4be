use thiserror::Error;

use crate::check::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed scalar {text:?}: {reason}")]
    MalformedScalar { text: String, reason: String },

    #[error("{structure} failed base validation ({})", .report.identity_name)]
    InvalidBase {
        structure: &'static str,
        report: Box<CheckReport>,
    },

    #[error("precondition of {operation} not met: {detail}")]
    Precondition {
        operation: &'static str,
        detail: String,
        report: Option<Box<CheckReport>>,
    },

    #[error("{arity}-variable check on dimension {dim} exceeds the guard of {limit} (force required)")]
    GuardExceeded { dim: usize, arity: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn precondition(operation: &'static str, report: CheckReport) -> Self {
        Error::Precondition {
            operation,
            detail: format!("{} did not pass", report.identity_name),
            report: Some(Box::new(report)),
        }
    }
}
