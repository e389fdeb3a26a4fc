use thiserror::Error;

use crate::multigraph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: EdgeId, m: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vertex {0} has degree 2 only through a loop and cannot be suppressed")]
    Unsuppressible(VertexId),

    #[error("edge subsets belong to different hosts ({0} vs {1} edges)")]
    HostMismatch(usize, usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not a subdivision of an odd graph")]
    NotInS,

    #[error("no T-join exists: T meets some component in an odd number of vertices")]
    InfeasibleTJoin,

    #[error("graph has a vertex incident only to loops and admits no odd edge-coloring")]
    NotOddColorable,

    #[error("construction diverged: {0}")]
    ConstructionDivergence(String),

    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported format: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
