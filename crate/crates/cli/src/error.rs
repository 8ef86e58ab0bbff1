use std::path::PathBuf;

use latin2ajami::{GlyphError, ProfileError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Table { path: PathBuf, source: GlyphError },
    #[error("{}: {source}", path.display())]
    Profile { path: PathBuf, source: ProfileError },
    #[error("{}: input is not valid UTF-8 (byte offset {offset})", path.display())]
    InvalidUtf8 { path: PathBuf, offset: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io { .. }
            | CliError::Table { .. }
            | CliError::Profile { .. }
            | CliError::InvalidUtf8 { .. } => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
