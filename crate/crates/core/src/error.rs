use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("absolute grading unknown for Σ({p},{q},{r}): no entry in the d-invariant table (supply --d or a table override)")]
    UnknownD { p: u64, q: u64, r: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal assertion failed: {0}")]
    Internal(String),

    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::UnknownD { .. } | Error::Unsupported(_) => 1,
            Error::Internal(_) => 2,
            Error::Resource(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
