use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("letter {letter} out of range for S_{n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("word is already reduced")]
    WordIsReduced,
    #[error("not an involution: {0}")]
    NotAnInvolution(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("block {index} ({block}) does not standardize to an involution")]
    NotABlockInvolution { index: usize, block: String },
    #[error("composition mismatch: {0} vs {1}")]
    CompositionMismatch(String, String),
    #[error("{0} does not refine {1}")]
    NotARefinement(String, String),
    #[error("{0} is not covered by {1}")]
    NotACover(String, String),
    #[error("({0},{1}) is not an admissible cycle")]
    NotACycle(usize, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
