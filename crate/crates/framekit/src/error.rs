use std::io;

use framekit_core::Error as CoreError;

/// Failure of a command, classified by exit code.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Core(#[from] CoreError),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    /// 2 usage, 3 data, 4 numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            Error::Parse(_) | Error::Io(_) => 3,
            Error::Core(e) => match e {
                CoreError::BadName(_) | CoreError::BadGenerator(_) => 2,
                CoreError::NotSquare { .. }
                | CoreError::NotHermitian { .. }
                | CoreError::NonFinite
                | CoreError::NotAFrame { .. }
                | CoreError::ZeroVector { .. }
                | CoreError::NotParseval { .. }
                | CoreError::NotOrthonormal { .. }
                | CoreError::NoComplement
                | CoreError::OrbitOverflow { .. }
                | CoreError::NotUnit { .. } => 4,
                _ => 3,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
