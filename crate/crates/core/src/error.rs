use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// No grid radius admits a solution within budget.
    #[error("infeasible instance: {forced} reassignments are forced even at the largest radius, budget is {budget}")]
    Infeasible { forced: usize, budget: usize },

    #[error("instance exceeds oracle limits: n={n} (max {max_n}), k={k} (max {max_k})")]
    LimitExceeded { n: usize, k: usize, max_n: usize, max_k: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
