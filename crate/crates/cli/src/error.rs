use std::io;

use fpfi::ValidationError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("size {0} is odd: fixed-point-free involutions need an even ground set")]
    OddSize(usize),
    #[error("{0}")]
    Range(String),
    #[error("line {line}: unparseable: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {}: {source}", source.kind())]
    Invalid {
        line: usize,
        source: ValidationError,
    },
    #[error("line {line}: {kind}: {detail}")]
    Inconsistent {
        line: usize,
        kind: &'static str,
        detail: String,
    },
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// 0 success, 1 semantic invalidity, 2 usage or range error, 3 overflow.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid { .. } | CliError::Inconsistent { .. } => 1,
            CliError::OddSize(_) | CliError::Range(_) | CliError::Parse { .. } | CliError::Io(_) => 2,
            CliError::Overflow(_) => 3,
        }
    }
}
