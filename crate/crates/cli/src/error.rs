use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: line {line}: {message}")]
    Parse {
        path: String,
        line: u64,
        message: String,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Core(#[from] ratiosel_core::Error),
    #[error("{0}")]
    Config(String),
}

impl CliError {
    /// 1 for domain and input errors, 2 for bad arguments or configuration.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Io { .. } => "IoError",
            CliError::Core(e) => e.kind(),
            CliError::Config(_) => "ConfigError",
        }
    }

    pub fn to_object(&self) -> ErrorObject {
        ErrorObject {
            error: ErrorBody {
                kind: self.kind().to_string(),
                message: self.to_string(),
                line: match self {
                    CliError::Parse { line, .. } => Some(*line),
                    _ => None,
                },
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorObject {
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<u64>,
}
