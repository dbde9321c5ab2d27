use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid argument: {0}")]
    Usage(String),
    /// An arithmetic operation has no answer for these inputs (e.g. a non-unit has no inverse).
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// Brute-force enumeration would exceed the configured number of terms.
    #[error("enumeration needs {needed} compositions, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
}

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
