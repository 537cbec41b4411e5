use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;

/// Failures of a command, each with a JSON rendering.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {source_name}: {message}")]
    Parse {
        source_name: String,
        message: String,
        line: usize,
        column: usize,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Core(#[from] lie_ncg_core::Error),
}

impl CliError {
    pub fn io(path: &Path, err: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }

    pub fn parse(source_name: impl Into<String>, err: &serde_json::Error) -> Self {
        CliError::Parse {
            source_name: source_name.into(),
            message: err.to_string(),
            line: err.line(),
            column: err.column(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Io { .. } => "IOError",
            CliError::InvalidArgument(_) => "InvalidArgument",
            CliError::Core(e) => e.kind(),
        }
    }

    /// `{"error": kind, "message": ..., ...details}`.
    pub fn to_json(&self) -> Value {
        let mut obj = match self {
            CliError::Parse {
                source_name,
                line,
                column,
                ..
            } => json!({ "source": source_name, "line": line, "column": column }),
            CliError::Io { path, .. } => json!({ "path": path }),
            CliError::InvalidArgument(_) => json!({}),
            CliError::Core(e) => serde_json::to_value(e).unwrap_or_else(|_| json!({})),
        };
        let map = obj.as_object_mut().expect("error details are objects");
        map.insert("error".into(), self.kind().into());
        map.insert("message".into(), self.to_string().into());
        obj
    }
}

pub type CliResult<T> = Result<T, CliError>;
