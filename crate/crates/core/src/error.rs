use thiserror::Error;

use crate::exact::Context;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("context mismatch: {0:?} vs {1:?}")]
    ContextMismatch(Context, Context),
    #[error("non-square")]
    NonSquare,
    #[error("not a unit: {0}")]
    NonUnit(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
