use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank: sl_{0} needs n >= 2")]
    InvalidRank(usize),
    #[error("dimension mismatch: {0}")]
    DimensionError(String),
    #[error("unknown bilinear form label {0:?}")]
    InvalidForm(String),
    #[error("invalid Weyl group word: {0}")]
    InvalidWeylWord(String),
    #[error("element is not supported on the opposite nilradical")]
    NotNilpotent,
    #[error("element does not lie in the opposite nilradical")]
    NotInNilradical,
    #[error("root {0} is not simple")]
    NotSimpleRoot(String),
    #[error("vector and operator belong to different modules")]
    ModuleMismatch,
    #[error("empty weight window")]
    EmptyWindow,
    #[error("weight {0} does not occur in the module")]
    EmptyWeightSpace(String),
    #[error("weight space at {0} is infinite-dimensional")]
    InfiniteWeightSpace(String),
    #[error("no closed formula for {0}; use the bracket closure")]
    UseBracketClosure(String),
    #[error("free-field realization is inconsistent: {0}")]
    RealizationBug(String),
    #[error("partitions of different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("level is not admissible: {0}")]
    NotAdmissible(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
