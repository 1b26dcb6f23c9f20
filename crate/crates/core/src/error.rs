use std::io;

use thiserror::Error;

/// Errors produced by the library and surfaced by the command-line tool.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration document failed validation.
    #[error("invalid configuration: {0}")]
    Validation(String),

    /// A numerical self-check failed (reality residual, certificate, ...).
    #[error("numerical consistency failure: {0}")]
    Numeric(String),

    /// The input does not have the algebraic structure an algorithm requires.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    /// Process exit code used by the command-line tool.
    ///
    /// `0` success, `2` validation, `3` numeric-certificate failure, `4` I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Validation(_) => 2,
            Error::Numeric(_) | Error::Structural(_) => 3,
            Error::Io(_) | Error::Json(_) | Error::Csv(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
