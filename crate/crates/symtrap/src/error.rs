use symtrap_core::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),

    #[error("invalid input: {0}")]
    Input(String),

    /// An explicit oracle disagreed with the fast path.
    #[error("verification failed: {0}")]
    Consistency(String),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for bad requests (including an unwritable destination), 3 for
    /// failed internal checks.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Core(e) => match e {
                Error::InvalidInput(_)
                | Error::SizeMismatch { .. }
                | Error::Unsupported(_)
                | Error::GuardExceeded(_)
                | Error::SearchExhausted { .. } => 2,
                Error::AlgorithmViolation(_) | Error::NotARepresentation(_) | Error::Overflow(_) => 3,
            },
            CliError::Consistency(_) => 3,
            CliError::Io(_) => 2,
        }
    }
}
