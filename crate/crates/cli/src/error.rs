use thiserror::Error;

/// Failure of a command, mapped to the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, config values or argument combinations (exit 2).
    #[error("usage: {0}")]
    Usage(String),
    /// Unreadable or invalid input data (exit 1).
    #[error("{0}")]
    Input(String),
    /// Rejected by the model or a numerical routine (exit 1).
    #[error(transparent)]
    Model(#[from] fracgrow_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) | CliError::Model(_) => 1,
        }
    }
}
