use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular over GF(2)")]
    NotInvertible,

    #[error("{what} = {value} exceeds the limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("code is not ACD: its trace-Euclidean Gram matrix is singular")]
    NotAcd,

    #[error("LCD required: {0}")]
    NotLcd(&'static str),

    #[error("self-dual binary code required: {0}")]
    NotSelfDual(&'static str),

    #[error("scalars must be distinct nonzero elements of GF(4), got a={a}, b={b}")]
    BadScalars { a: char, b: char },

    #[error("binary code length {0} is odd; folding needs a [2n, k] code")]
    OddLength(usize),

    #[error("{0}")]
    InvalidInput(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
