use thiserror::Error;

/// Usage, input and configuration errors. All map to exit status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid field {field}: {message}")]
    Field { field: String, message: String },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("unknown search target {0:?}")]
    UnknownTarget(String),

    #[error("target is a theorem, not a claim: {0}")]
    TheoremTarget(String),

    #[error("missing {0}")]
    Missing(String),

    #[error(transparent)]
    Core(#[from] myb_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn field(field: impl Into<String>, message: impl ToString) -> Self {
        CliError::Field {
            field: field.into(),
            message: message.to_string(),
        }
    }
}
