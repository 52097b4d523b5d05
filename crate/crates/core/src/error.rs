use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised by graph construction, solvers and generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("invalid label set: {0}")]
    InvalidLabels(String),
    #[error("period mismatch: graph has period {graph}, edge has period {edge}")]
    PeriodMismatch { graph: u64, edge: u64 },
    #[error("operation requires a {0} graph")]
    WrongMode(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: &'static str, found: String },
    #[error("every edge must carry exactly one label")]
    NotOneLabeling,
    #[error("label {0} outside the allowed domain {{1, 2}}")]
    LabelOutsideDomain(u64),
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("no resolving set inside the candidate pool")]
    PoolExhausted,
    #[error("invalid 3DM instance: {0}")]
    InvalidInstance(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("candidate search exhausted without a resolving set")]
    SearchExhausted,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
