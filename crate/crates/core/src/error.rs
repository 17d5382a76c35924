use thiserror::Error;

use crate::search::SearchResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{what} is not applicable: {reason}")]
    NotApplicable { what: String, reason: String },

    #[error("{what}: input size {size} exceeds the enumeration budget of {limit}")]
    OverBudget {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// The search ran out of nodes; the best incumbent found so far is kept.
    #[error("node budget of {budget} exhausted after finding {} edges", incumbent.max_edges)]
    BudgetExceeded {
        budget: u64,
        incumbent: Box<SearchResult>,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn not_applicable(what: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::NotApplicable {
            what: what.into(),
            reason: reason.into(),
        }
    }

    /// Stable machine-readable code used by the CLI error records.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) | Error::VertexOutOfRange { .. } => "invalid_input",
            Error::NotApplicable { .. } => "not_applicable",
            Error::OverBudget { .. } => "over_budget",
            Error::BudgetExceeded { .. } => "budget_exceeded",
        }
    }
}
