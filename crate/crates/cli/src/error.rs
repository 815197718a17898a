use std::process::ExitCode;

use scss_core::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    /// A solution failed its check; the message says why.
    #[error("verification failed: {0}")]
    Verify(String),

    #[error("{path}: {source}")]
    Input { path: String, source: Error },

    #[error(transparent)]
    Core(#[from] Error),

    #[error("{0}")]
    Csv(#[from] csv::Error),

    #[error("suite: {0}")]
    Suite(#[from] toml::de::Error),
}

impl CliError {
    pub fn input(path: &str, source: Error) -> Self {
        CliError::Input {
            path: path.to_string(),
            source,
        }
    }

    pub fn code(&self) -> u8 {
        let core = match self {
            CliError::Verify(_) => return EXIT_VERIFY,
            CliError::Input { source, .. } | CliError::Core(source) => source,
            _ => return EXIT_USAGE,
        };
        match core {
            Error::GuardExceeded { .. } => EXIT_GUARD,
            _ => EXIT_USAGE,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Prints the error, if any, and turns the outcome into a process status.
pub fn finish(r: CliResult<()>) -> ExitCode {
    match r {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
