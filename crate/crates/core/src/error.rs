use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation of 1..{n}: {values:?}")]
    NotAPermutation { n: usize, values: Vec<usize> },

    #[error("empty permutation")]
    EmptyPermutation,

    #[error("{what} of size {n} exceeds the supported maximum {max}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("pattern of size {pattern} is longer than the permutation of size {n}")]
    PatternTooLong { pattern: usize, n: usize },

    #[error("position {k} out of range 1..={n}")]
    PositionOutOfRange { k: usize, n: usize },

    #[error("cannot flatten a permutation of size 1")]
    FlattenSingleton,

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("q-number [{0}]_q is undefined; the argument must be at least 1")]
    InvalidQNumber(i64),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("constant term must be 1, found {0}")]
    ConstantTermNotOne(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),

    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("ordering is not a bijection of the vertex set: {0:?}")]
    InvalidOrdering(Vec<usize>),

    #[error("vertex {v} violates the clique-vertex conditions: {reason}")]
    CliqueVertexPrecondition { v: usize, reason: String },

    #[error("permutation {0} is not smooth")]
    NotSmooth(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("{what} = {requested} exceeds the ceiling {ceiling}")]
    ResourceBound {
        what: &'static str,
        requested: usize,
        ceiling: usize,
    },
}
