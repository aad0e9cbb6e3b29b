//! Library half of the `matsuo` command: argument parsing helpers, the claim
//! registry and report types. The binary is a thin clap layer over these.

pub mod claims;
pub mod report;
pub mod source;

/// Usage errors exit with 2, failed computations with 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}
