use thiserror::Error;

/// Crate-wide error type. The two variants mirror the CLI exit-code
/// contract: input errors exit with 2, unmet theorem preconditions with 3.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Exhaustive enumeration refused; reports the exact candidate count
    /// so callers can raise the budget deliberately.
    #[error("enumeration budget exceeded: {required} candidates requested, budget is {budget}")]
    Budget { required: u128, budget: u128 },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Process exit code for the CLI: 2 for bad input (including refused
    /// budgets), 3 for violated preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Budget { .. } => 2,
            Error::Precondition(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
