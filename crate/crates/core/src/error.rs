use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),
    #[error("invalid word: {0}")]
    Word(String),
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("word successor steps below the empty word")]
    BelowEmptyWord,
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("operation requires a homogeneous presentation")]
    Inhomogeneous,
    #[error("truncation insufficient: {0}")]
    Truncation(String),
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("invalid simplicial complex: {0}")]
    Complex(String),
    #[error("invalid vertex ordering: {0}")]
    Ordering(String),
    #[error("vertex count {count} exceeds the search cap {cap}")]
    CapExceeded { count: usize, cap: usize },
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown command `{0}`")]
    Command(String),
}

pub type Result<T> = std::result::Result<T, Error>;
