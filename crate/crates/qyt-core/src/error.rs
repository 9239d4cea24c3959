//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse partition from {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("cell (col {col}, row {row}) lies outside the shape ({shape})")]
    CellOutOfShape {
        col: usize,
        row: usize,
        shape: String,
    },

    #[error("rows do not form a partition shape or contain a non-positive entry")]
    MalformedTableau,

    #[error("operation undefined for the empty shape")]
    EmptyShape,

    #[error("input is not a semistandard tableau")]
    NotSemistandard,

    #[error("input is not a standard tableau")]
    NotStandard,

    #[error("input is not a quasi-Yamanouchi tableau")]
    NotQuasiYamanouchi,

    #[error("descent set must be strictly increasing within 1..n-1, got {0:?}")]
    InvalidDescentSet(Vec<usize>),

    #[error("m = {m} outside the feasible range [{lo}, {hi}]")]
    OutOfRange { m: u32, lo: u32, hi: u32 },

    #[error("shape ({shape}) has Durfee size {actual}, expected {expected}")]
    WrongDurfeeSize {
        shape: String,
        expected: usize,
        actual: usize,
    },

    #[error("frame entries must satisfy lambda1 >= lambda2 >= 2 and h1 >= h2 >= 2")]
    InvalidFrame,

    #[error("enumeration budget of {budget} states exceeded")]
    BudgetExceeded { budget: u64 },
}
