use thiserror::Error;

/// Everything that can go wrong while building or checking a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("invalid component: {0}")]
    InvalidComponent(String),
    #[error("invalid plan: {0}")]
    InvalidPlan(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("search budget of {0} nodes exceeded")]
    Budget(u64),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
