use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate point: sequence indices {first} and {second} share the value {value}")]
    DuplicatePoint {
        first: u64,
        second: u64,
        value: String,
    },

    #[error("window width {r} is out of range (must satisfy 1 <= r {bound})")]
    InvalidWindow { r: u64, bound: String },

    #[error("malformed bit strings: {0}")]
    MalformedBits(String),

    #[error("index range out of bounds: {0}")]
    InvalidRange(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("precision warning: {0}")]
    PrecisionWarning(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}
