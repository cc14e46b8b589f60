use std::fmt;
use std::process::ExitCode;

use mostar_core::families::FamilyError;
use mostar_core::formulas::{BoundError, FormulaError};
use mostar_core::indices::IndexError;
use mostar_core::io::FormatError;
use mostar_core::polymer::PolymerError;

/// An error carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const DISAGREEMENT: u8 = 1;
pub const RUNTIME: u8 = 1;
pub const INVALID: u8 = 2;
pub const NOT_CONNECTED: u8 = 3;

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self { code: INVALID, message: message.into() }
    }

    pub fn runtime(message: impl Into<String>) -> Self {
        Self { code: RUNTIME, message: message.into() }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<IndexError> for Failure {
    fn from(e: IndexError) -> Self {
        let code = match e {
            IndexError::NotConnected => NOT_CONNECTED,
            IndexError::EdgeNotInGraph(..) => INVALID,
            IndexError::Overflow => RUNTIME,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Self::invalid(e.to_string())
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        Self::invalid(e.to_string())
    }
}

impl From<PolymerError> for Failure {
    fn from(e: PolymerError) -> Self {
        Self::invalid(e.to_string())
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::Index(e) => e.into(),
            FormulaError::Overflow => Self::runtime(e.to_string()),
            _ => Self::invalid(e.to_string()),
        }
    }
}

impl From<BoundError> for Failure {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Index(e) => e.into(),
            BoundError::Overflow => Self::runtime(e.to_string()),
            _ => Self::invalid(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::runtime(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Self::runtime(e.to_string())
    }
}
