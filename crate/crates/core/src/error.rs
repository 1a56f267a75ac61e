use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("{vertex} is not a vertex of {dynkin}")]
    NotAVertex { vertex: i32, dynkin: String },

    #[error("mismatched types: {0} vs {1}")]
    Mismatch(String, String),

    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    Capacity { order: u64, cap: usize },

    #[error("{0} is not join-irreducible")]
    NotJoinIrreducible(String),

    #[error("not an R-set of any join-irreducible: {0}")]
    NotAnRSet(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
