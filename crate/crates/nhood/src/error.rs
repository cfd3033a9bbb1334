use std::path::PathBuf;

/// Failures of the std layer, grouped by process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags, proportions, orderings or model sizes. Exit 1.
    #[error("{0}")]
    Config(String),

    /// Reading or writing a file failed, or a file did not parse. Exit 2.
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },

    /// A strategy produced an output that fails verification. Exit 3.
    #[error("internal error: {0}")]
    Internal(String),

    /// A user-supplied compression is not valid for the original graph. Exit 4.
    #[error("{0}")]
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Internal(_) => 3,
            CliError::Verify(_) => 4,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, err: impl std::fmt::Display) -> Self {
        CliError::Io {
            path: path.into(),
            message: err.to_string(),
        }
    }
}

impl From<nhood_core::Error> for CliError {
    fn from(err: nhood_core::Error) -> Self {
        CliError::Config(err.to_string())
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
