//! Driver for `nhent-core`: config files, CSV/JSONL writers and the subcommands.

pub mod commands;
pub mod config;
pub mod format;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    ConfigInvalid(String),
    #[error("{path}: {source}")]
    IoFailure {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] nhent_core::Error),
}

impl CliError {
    pub fn category(&self) -> &'static str {
        match self {
            CliError::ConfigInvalid(_) => "ConfigInvalid",
            CliError::IoFailure { .. } => "IoFailure",
            CliError::Core(e) => e.category(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ConfigInvalid(_) => 2,
            CliError::IoFailure { .. } => 3,
            CliError::Core(_) => 4,
        }
    }
}
