use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty item list")]
    EmptyItems,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("invalid grid shape {rows}x{cols}: rows and cols must both be at least 2")]
    InvalidShape { rows: usize, cols: usize },

    #[error("invalid training config: {0}")]
    InvalidConfig(String),

    #[error("round {round} out of range for a {rounds}-round schedule")]
    RoundOutOfRange { round: usize, rounds: usize },

    #[error("feature index {index} out of range for dimension {dim}")]
    FeatureOutOfRange { index: usize, dim: usize },

    #[error("node ({row}, {col}) outside the {rows}x{cols} grid")]
    NodeOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("{name} = {value} is outside [0, 1]")]
    ParamOutOfRange { name: &'static str, value: f64 },

    #[error("expected {expected} sonification parameters, got {found}")]
    ParamCount { expected: String, found: usize },

    #[error("sample rate {0} Hz is below the 8000 Hz minimum")]
    InvalidSampleRate(u32),

    #[error("frequency {0} Hz is not positive")]
    NonPositiveFrequency(f64),

    #[error("ramp of {0} ms is negative")]
    NegativeRamp(f64),

    #[error("duration {0} s must be positive and finite")]
    InvalidDuration(f64),

    #[error("modulation matrix: {0}")]
    ModMatrix(String),

    #[error("{path}:{line}: {reason}")]
    Parse {
        path: PathBuf,
        line: u64,
        reason: String,
    },

    #[error("unsupported bundle version {found:?} (expected major version {expected})")]
    BundleVersion {
        found: String,
        expected: &'static str,
    },

    #[error("bundle schema: {0}")]
    BundleSchema(String),

    #[error("bundle field `{field}`: {reason}")]
    Consistency { field: String, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("encoding {what}: {reason}")]
    Encode { what: &'static str, reason: String },
}

impl Error {
    /// True when the failure came from the filesystem rather than from the data.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. })
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
