//! Library backing the `quadlie` binary: the algebra description file
//! format, result reports, and the verification suites.

pub mod file;
pub mod report;
pub mod verify;

use thiserror::Error;

/// CLI-level failures, split by exit code: parse/input problems exit 2,
/// verification failures exit 1 (reported, not errored).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Input(String),
}

impl From<quadlie::Error> for CliError {
    fn from(e: quadlie::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(format!(
            "{} at line {}, column {}",
            e,
            e.line(),
            e.column()
        ))
    }
}

pub type CliResult<T> = Result<T, CliError>;
