use std::path::PathBuf;

use crate::MethodId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("k must be at least 1")]
    EmptyPalette,

    #[error("string palette supports at most {capacity} distinct values, got k = {k}")]
    PaletteTooLarge { k: u64, capacity: u64 },

    #[error("invalid benchmark configuration: {0}")]
    Config(String),

    #[error("{method} produced unsorted output for n = {n}, k = {k}, array #{index}")]
    NotSorted {
        method: MethodId,
        n: usize,
        k: u64,
        index: usize,
    },

    #[error("malformed CSV at row {row}: {message}")]
    Csv { row: u64, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Stdio(#[from] std::io::Error),
}
