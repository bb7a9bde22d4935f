use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid permutation pair: {0}")]
    InvalidPair(String),
    #[error("index {index} exceeds the configured limit {limit}")]
    IndexLimit { index: usize, limit: usize },
    #[error("group order exceeds the configured bound {bound}")]
    OrderBound { bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("value does not lie in the cyclotomic field of conductor {0}")]
    NotInField(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
