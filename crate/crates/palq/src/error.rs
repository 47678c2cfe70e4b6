use thiserror::Error;

/// Errors reported by index construction, queries, and persistence.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot index an empty text")]
    EmptyText,

    #[error("cannot build a range-maximum index over an empty array")]
    EmptyArray,

    #[error("invalid query range ({i}, {j}) for length {n}: need 1 <= i <= j <= n")]
    InvalidRange { i: usize, j: usize, n: usize },

    #[error("index {index} out of range 1..={len}")]
    OutOfRange { index: usize, len: usize },

    #[error("node {id} does not represent a non-empty palindrome")]
    NotAPalindrome { id: u32 },

    #[error("weighted ancestor query precondition violated: weight {weight} <= threshold {k}")]
    WaqPrecondition { weight: u32, k: u32 },

    #[error("internal consistency violation: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed index file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
