use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input files or arguments.
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    /// A pipeline that fails to load or to verify.
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            CliError::Usage(_) | CliError::Io { .. } => 2,
        }
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }
    }
}

impl From<dirac_core::fastmult::FastMultError> for CliError {
    fn from(e: dirac_core::fastmult::FastMultError) -> Self {
        use dirac_core::fastmult::FastMultError as E;
        match e {
            E::Io { path, message } => CliError::Io { path, message },
            other => CliError::Check(other.to_string()),
        }
    }
}
