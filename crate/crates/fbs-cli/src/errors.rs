//! CLI error type and the stable exit-code contract:
//! 2 = input error, 3 = query error, 4 = numerical non-convergence.

use std::fmt;
use std::path::PathBuf;

#[derive(Debug)]
pub enum CliError {
    /// Algorithm or parsing error from the core library.
    Core(fbs_core::Error),
    /// Filesystem access failure, with the offending path.
    Io { path: PathBuf, source: std::io::Error },
    /// Invalid flag combination or value not already caught by the
    /// argument parser.
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(err) => match err {
                fbs_core::Error::UnknownLabel { .. }
                | fbs_core::Error::NodeOutOfRange { .. } => 3,
                fbs_core::Error::NonConvergence { .. } => 4,
                _ => 2,
            },
            CliError::Io { .. } | CliError::Usage(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(err) => err.fmt(f),
            CliError::Io { path, source } => {
                write!(f, "cannot access {}: {source}", path.display())
            }
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<fbs_core::Error> for CliError {
    fn from(err: fbs_core::Error) -> Self {
        CliError::Core(err)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
