use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("length {len} exceeds the supported maximum of {max}")]
    TooLong { len: usize, max: usize },

    #[error("length {0} is not a multiple of 4")]
    NotMultipleOfFour(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} is {value}, above the enumeration budget of {limit}")]
    BudgetExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("generator rows are dependent: expected rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },

    #[error("code self-check failed: {0}")]
    SelfCheck(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
