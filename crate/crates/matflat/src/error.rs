//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("division by zero in GF({q})")]
    DivideByZero { q: usize },

    #[error("element {0} is a loop")]
    LoopElement(usize),

    #[error("matroid has a U_{{2,{found}}}-minor, so it is not in U({ell})")]
    NotInClass { ell: u64, found: usize },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
