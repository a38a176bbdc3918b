use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational {0:?}")]
pub struct ParseRationalError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank position out of range: need s < t < {n}, got s = {s}, t = {t}")]
    IndexOutOfRange { s: usize, t: usize, n: usize },
    #[error("invalid ranking: {0}")]
    InvalidRanking(String),
    #[error("instance too large for exhaustive search: n = {n} exceeds cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("bad generator parameters: {0}")]
    BadParams(String),
}

/// Failure to read one of the text formats; `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, reason: impl Into<String>) -> Self {
        Self { line, reason: reason.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
