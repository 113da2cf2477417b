use thiserror::Error;

/// Error type shared by all operations in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A probability vector or table failed validation.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// Structurally invalid arguments (bad coordinates, empty inputs, malformed grids).
    #[error("argument error: {0}")]
    Argument(String),

    /// The requested computation exceeds the supported problem size.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// The parameter lies outside the range in which the checked statement holds.
    #[error("unsupported range: {0}")]
    UnsupportedRange(String),

    /// A stated precondition of the operation does not hold for this input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Failure while parsing external input (files, JSON, matrix text).
    #[error("ingestion error: {0}")]
    Ingestion(String),
}

pub type Result<T> = std::result::Result<T, Error>;
