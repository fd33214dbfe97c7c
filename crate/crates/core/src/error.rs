use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("{what} exceeded cap {cap}")]
    CapExceeded { what: String, cap: usize },
    #[error("decomposition inconclusive: {0}")]
    DecompositionInconclusive(String),
    #[error("modules or maps live over different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("dominant dimension too small: need {needed}, have {actual}")]
    DomdimTooSmall { needed: usize, actual: String },
    #[error("algebra is not basic and split: {0}")]
    NonBasic(String),
    #[error("permutation search limited to 10 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Whether this error reflects an exhausted budget rather than a definite answer.
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::DecompositionInconclusive(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
