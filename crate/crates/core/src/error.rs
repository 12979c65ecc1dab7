use thiserror::Error;

use crate::families::FamilyError;
use crate::graph::GraphError;
use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    /// Search stopped early; `best` is the best value found, not exact.
    #[error("node budget of {budget} exhausted (best value so far: {best:?})")]
    NodeBudget { budget: u64, best: Option<usize> },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
