//! Config-driven pipeline stages behind the `cce` binary.
//!
//! Every stage reads the artifacts of the previous one from the build
//! directory, writes its own atomically, records their digests in
//! `digests.json` and returns a one-line JSON summary.

use std::path::PathBuf;

pub mod artifacts;
pub mod commands;
pub mod config;

pub use commands::{cmd_complete, cmd_eval, cmd_fit, cmd_ingest, cmd_simulate, cmd_train_strategies, Summary};
pub use config::RunConfig;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("missing artifact {}; run `{stage}` first", path.display())]
    Missing { stage: &'static str, path: PathBuf },
    #[error(transparent)]
    Internal(#[from] anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Missing { .. } => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<cce::Error> for CliError {
    fn from(e: cce::Error) -> Self {
        match e {
            cce::Error::Config(msg) => CliError::Config(msg),
            other => CliError::Internal(other.into()),
        }
    }
}
