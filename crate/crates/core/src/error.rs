use std::fmt;

use crate::Natural;

/// Errors reported by the factorization pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input violates an operation's precondition.
    InvalidInput { reason: String },
    /// The candidate budget ran out before the search on `unresolved` settled.
    ///
    /// Never a verdict: the caller must retry with a larger (or no) budget or
    /// treat the number as unresolved.
    BudgetExhausted { unresolved: Natural, budget: u64 },
}

impl Error {
    pub(crate) fn invalid(reason: impl Into<String>) -> Self {
        Error::InvalidInput {
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput { reason } => write!(f, "invalid input: {reason}"),
            Error::BudgetExhausted { unresolved, budget } => {
                write!(f, "budget of {budget} candidates exhausted on {unresolved}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
