use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Name not in the embedded catalog.
    #[error("unknown case `{0}` (not in catalog)")]
    UnknownCase(String),

    /// Input outside the mathematical domain of an operation
    /// (non-dominant highest weight, zero Satake coordinate, a = 1, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Vector or matrix shape mismatch.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A brute-force construction would exceed its configured size bound.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Malformed textual input ("p/q" strings, JSON case files).
    #[error("parse error: {0}")]
    Parse(String),

    /// Case data failed a structural invariant at load time.
    #[error("invalid case data: {0}")]
    InvalidCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;
