use thiserror::Error;

/// Errors produced by the algebra and parsing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: images must be a bijection of 1..={0}")]
    InvalidPermutation(usize),
    #[error("invalid composition: parts must be positive")]
    InvalidComposition,
    #[error("invalid partition: parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("descent position {pos} out of range 1..={max}")]
    DescentOutOfRange { pos: usize, max: usize },
    #[error("degree {n} outside [{min}, {max}]")]
    DegreeOutOfRange { n: usize, min: usize, max: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("word has length {got}, expected {expected}")]
    WordLength { expected: usize, got: usize },
    #[error("element is not a sum of descent classes at degree {0}")]
    NotDescentClosed(usize),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("truncation too coarse: need at least {needed} variables per group, have {have}")]
    Truncation { needed: usize, have: usize },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("eval error at offset {offset}: {message}")]
    Eval { offset: usize, message: String },
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("unsupported table request: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, Error>;
