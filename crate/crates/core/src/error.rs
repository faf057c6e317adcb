use thiserror::Error;

use crate::graph::Color;
use crate::vertex_set::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("color {color} out of range 1..={r}")]
    ColorOutOfRange { color: usize, r: usize },

    #[error("a graph needs at least one color")]
    NoColors,

    #[error("self-pair ({0}, {0}) is not allowed")]
    SelfPair(usize),

    #[error("pair ({u}, {v}) listed with conflicting colors {first} and {second}")]
    ConflictingColor {
        u: usize,
        v: usize,
        first: Color,
        second: Color,
    },

    #[error("diameter of an empty vertex set is undefined")]
    EmptyVertexSet,

    #[error("expected a complete graph, but ({u}, {v}) is not an edge")]
    NotComplete { u: usize, v: usize },

    #[error("operation requires exactly {expected} colors, graph has {found}")]
    WrongColorCount { expected: u8, found: u8 },

    #[error("operation requires at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("complement contains the triangle {0:?}, so the independence number exceeds 2")]
    ComplementTriangle([usize; 3]),

    #[error("complement of the graph is not bipartite")]
    ComplementNotBipartite,

    #[error("vertices {u} and {v} are adjacent")]
    PairAdjacent { u: usize, v: usize },

    #[error("independent set {0:?} of size 3 contradicts independence number 2")]
    IndependentTriple([usize; 3]),

    #[error("operation requires independence number {expected}, found {found}")]
    WrongIndependenceNumber { expected: usize, found: usize },

    #[error("invalid near-split structure: {0}")]
    InvalidNearSplit(String),

    #[error("invalid house decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("{what} limit exceeded: {n} > {limit}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A property that a proof guarantees was observed false. Always a bug.
    #[error("internal invariant violated in {branch}: {detail}")]
    ProofInvariant { branch: String, detail: String },
}

impl Error {
    pub(crate) fn invariant(branch: &str, detail: impl Into<String>) -> Self {
        Error::ProofInvariant {
            branch: branch.to_string(),
            detail: detail.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub(crate) fn ensure_in_range(set: VertexSet, n: usize) -> Result<()> {
    match set.iter().find(|&v| v >= n) {
        Some(vertex) => Err(Error::VertexOutOfRange { vertex, n }),
        None => Ok(()),
    }
}
