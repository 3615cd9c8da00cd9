use thiserror::Error;

use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    Loop(Vertex),

    #[error("distance parameter p must be at least 1")]
    ZeroDistance,

    #[error("graphs must share a vertex set: expected {expected} vertices, found {found}")]
    VertexCountMismatch { expected: usize, found: usize },

    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("ordering is not a perfect elimination ordering: vertex {vertex} has non-adjacent earlier neighbours {a} and {b}")]
    NotPerfectElimination { vertex: Vertex, a: Vertex, b: Vertex },

    #[error("graph is not chordal: induced cycle {0:?}")]
    NotChordal(Vec<Vertex>),

    #[error("empty clique")]
    EmptyClique,

    #[error("vertices {0} and {1} are not adjacent, so the set is not a clique")]
    NotAClique(Vertex, Vertex),

    #[error("level {level} out of range (deepest level is {max})")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("vertex {0} is not reachable from the root")]
    Unreachable(Vertex),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph has {n} vertices, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("coloring has {found} entries for a graph on {n} vertices")]
    ColoringSize { n: usize, found: usize },

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("no vertex satisfies the sigma condition for vertex {0}")]
    NoSigma(Vertex),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
