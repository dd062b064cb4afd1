use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("algebra parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("partition {0} is not in P_{1}({2})")]
    NotInPSet(String, usize, usize),

    #[error("rank formula produced a non-integral value {0}")]
    NonIntegral(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("element acts non-scalarly: {0}")]
    NonScalarAction(String),

    #[error("no candidate central character matches the module")]
    NoMatchingCharacter,

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("generator index out of range: {0}")]
    IndexOutOfRange(String),
}
