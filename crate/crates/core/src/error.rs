//! Error type shared across the crate.

use std::path::PathBuf;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("file not found: {0}")]
    FileNotFound(PathBuf),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed row at line {line}: {reason}")]
    MalformedRow { line: usize, reason: String },

    #[error("dataset is empty after preprocessing")]
    EmptyDataset,

    #[error("label column '{0}' not found")]
    LabelColumnNotFound(String),

    #[error("feature {index} ('{name}') is constant in the fitted data")]
    ConstantFeature { index: usize, name: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degenerate split: {0}")]
    DegenerateSplit(String),

    #[error("class {0} has no samples")]
    EmptyClass(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("column is empty")]
    EmptyColumn,

    #[error("feature subset is empty")]
    EmptySubset,

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    /// Process exit code for the CLI: 2 for configuration problems, 1 for
    /// data problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::LabelColumnNotFound(_) | Error::Config(_) => 2,
            _ => 1,
        }
    }
}
