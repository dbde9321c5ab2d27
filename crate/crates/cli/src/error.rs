use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] franel_core::Error),
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// 2 for usage problems, 3 for I/O and internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Core(franel_core::Error::Usage(_) | franel_core::Error::BudgetExceeded { .. }) => 2,
            Self::Usage(_) => 2,
            Self::Core(franel_core::Error::Arithmetic(_)) | Self::Io { .. } | Self::Internal(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
