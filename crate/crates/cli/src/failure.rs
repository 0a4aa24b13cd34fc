use std::fmt;

use pferrer::ideal::IdealError;
use pferrer::macaulay::MacaulayError;
use pferrer::series::SeriesError;
use pferrer::{DiagramError, OracleError};

/// Error classes, one exit code each.
#[derive(Debug)]
pub enum Failure {
    /// Unreadable or invalid input.
    Input(String),
    /// A formula disagreed with an oracle.
    Mismatch(String),
    /// `verify` found a failing check: the summary still goes to stdout.
    Verification { summary: String, counterexample: String },
    /// Input beyond the configured size limits.
    Limit(String),
    NotMVector(String),
    Infeasible(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Mismatch(_) | Failure::Verification { .. } => 3,
            Failure::Limit(_) => 4,
            Failure::NotMVector(_) => 5,
            Failure::Infeasible(_) => 6,
        }
    }

    pub fn stdout(&self) -> Option<&str> {
        match self {
            Failure::Verification { summary, .. } => Some(summary),
            _ => None,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Mismatch(m) | Failure::Limit(m) | Failure::NotMVector(m) | Failure::Infeasible(m) => {
                write!(f, "{m}")
            }
            Failure::Verification { counterexample, .. } => {
                write!(f, "verification failed; smallest failing diagram:\n{counterexample}")
            }
        }
    }
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        match e {
            DiagramError::TooDeep { .. } | DiagramError::TooManyBoxes { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::TooManyVariables { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<SeriesError> for Failure {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::TooManyGenerators { .. } => Failure::Limit(e.to_string()),
            SeriesError::NotPLinearShape(_) => Failure::Mismatch(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Limit(e.to_string())
    }
}

impl From<MacaulayError> for Failure {
    fn from(e: MacaulayError) -> Self {
        match e {
            MacaulayError::NotAnMVector { .. } => Failure::NotMVector(e.to_string()),
            MacaulayError::Diagram(e) => e.into(),
            MacaulayError::Ideal(e) => e.into(),
            MacaulayError::Series(e) => e.into(),
            MacaulayError::BadStart | MacaulayError::CountOutOfRange { .. } | MacaulayError::NotClosedUnderDivision(_) => {
                Failure::Input(e.to_string())
            }
        }
    }
}
