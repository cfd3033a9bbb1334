use alloc::string::String;

use crate::lp::LpStatus;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop on vertex {vertex} is not allowed in a simple graph")]
    SelfLoop { vertex: u64 },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: u64, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge ({u}, {v}) is not an edge of the original graph")]
    NotSubgraph { u: u64, v: u64 },

    #[error("vertex count mismatch: expected {expected}, found {found}")]
    VertexCountMismatch { expected: usize, found: usize },

    #[error("invalid proportion function: {0}")]
    InvalidProportion(String),

    #[error("edge ordering is not a permutation of the graph's edges: {0}")]
    InvalidOrdering(String),

    #[error("invalid simulated annealing parameters: {0}")]
    InvalidSaParams(String),

    #[error(
        "LP model too large ({edges} edges, t = {t}; limits are {max_edges} edges, t <= {max_t}); \
         use the ec or random ordering instead"
    )]
    LpTooLarge {
        edges: usize,
        t: usize,
        max_edges: usize,
        max_t: usize,
    },

    #[error("LP model has more than {max_paths} path variables; use the ec or random ordering instead")]
    LpTooManyPaths { max_paths: usize },

    #[error("LP feasibility witness violated row {row}; model construction is inconsistent")]
    LpWitness { row: usize },

    #[error("LP solve did not reach an optimum: {0:?}")]
    LpNotOptimal(LpStatus),

    #[error("compression ratio is undefined for a graph without edges")]
    EmptyGraph,

    #[error("brute-force search limited to {limit} edges, graph has {edges}")]
    BruteForceTooLarge { edges: usize, limit: usize },

    #[error("cannot place {m} edges on {n} vertices (at most {max})")]
    TooManyEdges { n: usize, m: usize, max: u64 },

    #[error("invalid graph family: {0}")]
    InvalidFamily(String),

    #[error("unknown builtin graph {0:?}")]
    UnknownBuiltin(String),
}
