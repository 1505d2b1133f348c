use crate::arith::Int;

/// Errors surfaced by the workbench.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Trial division stopped with an unfactored cofactor.
    #[error("divisor budget exceeded: cofactor {cofactor} has no factor <= {max_trial}")]
    BudgetExceeded { cofactor: Int, max_trial: u64 },

    /// Two routes that must agree did not. Always a bug.
    #[error("internal consistency error: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
