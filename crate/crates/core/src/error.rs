use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),

    #[error("connectivity order k must be at least 2, got {0}")]
    InvalidOrder(usize),

    #[error("flow graph construction needs a nonempty blue set")]
    EmptyBlueSet,

    #[error("level {level} is not below log(gamma) for gamma = {gamma}")]
    LevelOutOfRange { level: usize, gamma: usize },

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("expanded vertices of original vertex {0} were split across components")]
    SplitExpansion(VertexId),

    #[error("vertex {vertex} has degree {degree}, above the bound of 3")]
    DegreeBound { vertex: VertexId, degree: usize },

    #[error("brute force is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("epsilon {0} outside (0, 1)")]
    InvalidEpsilon(f64),

    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("{0}")]
    DigestMismatch(Box<Mismatch>),
}

/// Two algorithms disagreeing on one instance.
#[derive(Debug, Error, Clone, PartialEq)]
#[error("digest mismatch on {instance} (seed {seed}): {left} gives {left_digest}, {right} gives {right_digest}")]
pub struct Mismatch {
    pub instance: String,
    pub seed: u64,
    pub left: String,
    pub left_digest: String,
    pub right: String,
    pub right_digest: String,
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
