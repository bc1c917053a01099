use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pahs_core::Error),

    #[error("{0}")]
    Usage(String),

    #[error("{0} row(s) failed")]
    RowsFailed(usize),

    #[error("{0} row(s) did not converge")]
    Unconverged(usize),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 invalid parameters, 3 convergence failure, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(pahs_core::Error::QuadratureNotConverged { .. }) => 3,
            CliError::Unconverged(_) => 3,
            CliError::Core(_) | CliError::Usage(_) | CliError::RowsFailed(_) => 2,
            CliError::Io { .. } | CliError::Csv(_) | CliError::Json(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
