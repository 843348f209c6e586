use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: vertex {unreached} is unreachable from vertex 0")]
    Disconnected { unreached: usize },
    #[error("source set is empty")]
    EmptySources,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("more than {cap} shortest paths between {u} and {v} (stopped after {count})")]
    CapExceeded {
        u: usize,
        v: usize,
        cap: usize,
        count: usize,
    },
    #[error("graph has {n} vertices, above the exact-computation limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
