use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows} rows, {cols} columns)")]
    NotSquare { rows: usize, cols: usize },

    #[error("index {k} is out of range for n = {n} (need k < 2^(n-1))")]
    IndexOutOfRange { n: u32, k: u64 },

    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("{what} = {value} exceeds the budget of {limit}")]
    Budget {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse signature: token {token:?} at position {position}")]
    SignatureParse { position: usize, token: String },

    #[error("construction produced a term C(n,{t}) outside the exponent set of k = {k}")]
    StrayTerm { k: u64, t: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn budget(what: &'static str, value: u64, limit: u64) -> Result<()> {
    if value > limit {
        Err(Error::Budget { what, value, limit })
    } else {
        Ok(())
    }
}
