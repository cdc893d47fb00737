use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("coefficient of degree {degree} requested beyond truncation order {order}")]
    BeyondTruncation { degree: usize, order: usize },

    #[error("series division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("composition requires an inner series with zero constant term")]
    NonzeroConstantTerm,

    #[error("reversion requires f(0) = 0 and f'(0) != 0")]
    NotReversible,

    #[error("logarithm requires constant term 1")]
    LogConstantTerm,

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("singular linear system")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
