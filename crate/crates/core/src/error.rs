use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("interval square root of a negative lower bound {0}")]
    NegativeSqrt(String),

    #[error("cannot separate value from {target} even at {bits} bits")]
    CannotSeparate { target: String, bits: u32 },

    #[error("rotor is not a unit complex number (norm {0})")]
    NonUnitRotor(String),

    #[error("invalid spindle parameters: {0}")]
    InvalidSpindle(String),

    #[error("spindle copies coincide at base vertices {0} and {1}")]
    CoincidentCopies(usize, usize),

    #[error("vertex index {index} out of range for graph with {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },

    #[error("vertex {0} is not in the graph")]
    MissingVertex(String),

    #[error("no embedding of the pattern into the host graph")]
    NoEmbedding,

    #[error("pair ({0}, {1}) is not forced; reduction requires a forcing pair")]
    NotForcing(usize, usize),

    #[error("pair ({0}, {1}) is already an edge")]
    PairIsEdge(usize, usize),

    #[error("solver budget exhausted before a verdict")]
    Timeout,

    #[error("inconsistent precoloring: {0}")]
    BadPrecoloring(String),

    #[error("graph validation failed: {0}")]
    Validation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
