use std::path::PathBuf;

use thiserror::Error;

/// Failures of a command, each mapped to one exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{file}: {location}: {message}")]
    Parse { file: String, location: String, message: String },
    #[error(transparent)]
    Core(#[from] grady_core::Error),
    #[error("the ring is not epsilon-strongly graded: {0}")]
    NotEpsilonStrong(String),
    #[error("unknown example {0:?}; run `grady examples` for the list")]
    UnknownExample(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use grady_core::Error as E;
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::UnknownExample(_) => 2,
            CliError::NotEpsilonStrong(_) => 4,
            CliError::Core(e) => match e {
                E::CapExceeded { .. } => 3,
                E::Precondition(_) => 4,
                E::InvalidGroup(_)
                | E::InvalidCoeffRing(_)
                | E::Invalid(_)
                | E::HomogeneityViolation { .. }
                | E::AssociativityViolation { .. }
                | E::TorsionViolation { .. }
                | E::IdentityViolation(_)
                | E::GradingViolation { .. }
                | E::ActionAssociativityViolation { .. }
                | E::IdentityActionViolation(_) => 2,
                _ => 1,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
