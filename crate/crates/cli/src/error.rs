use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{context}: {source}")]
    Input { context: String, source: riordan::Error },

    #[error(transparent)]
    Domain(#[from] riordan::Error),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Input { source, .. } => match source {
                riordan::Error::Parse { .. } | riordan::Error::Format(_) | riordan::Error::InsufficientOrder { .. } => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(3),
            },
            CliError::Domain(_) => ExitCode::from(3),
            CliError::Io { .. } => ExitCode::from(1),
        }
    }
}
