use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use quasiproj_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },

    #[error("{0}")]
    Verification(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Short tag printed as `error[tag]`.
    pub fn tag(&self) -> &'static str {
        match self.exit_code() {
            2 => "config",
            3 => "unsupported",
            4 => "budget",
            5 => "verify",
            _ => match self {
                CliError::Io { .. } => "io",
                _ => "internal",
            },
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Verification(_) => 5,
            CliError::Io { .. } => 1,
            CliError::Core(e) => match e {
                CoreError::Unsupported { .. } => 3,
                CoreError::BudgetExceeded { .. } => 4,
                CoreError::InvalidRank { .. }
                | CoreError::ParseGroup(_)
                | CoreError::NodeOutOfRange { .. }
                | CoreError::RankMismatch { .. }
                | CoreError::AxisOutOfRange { .. }
                | CoreError::AxisOverlap(_)
                | CoreError::InvalidArgument(_) => 2,
                _ => 1,
            },
        }
    }

    /// The single line written to stderr.
    pub fn report(&self) -> String {
        let msg = self.to_string().replace('\n', " ");
        format!("error[{}]: {}", self.tag(), msg)
    }

    pub fn exit(&self) -> ExitCode {
        ExitCode::from(self.exit_code())
    }
}
