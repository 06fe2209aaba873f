//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes are incompatible for the attempted operation.
    #[error("dimension mismatch in {op}: {detail}")]
    Dimension { op: &'static str, detail: String },

    /// An operation was called outside its contract (e.g. backward on a
    /// non-scalar).
    #[error("invalid usage of {op}: {detail}")]
    Usage { op: &'static str, detail: String },

    /// A configuration value is out of range or inconsistent.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Correlation is undefined because an input is constant.
    #[error("undefined correlation: {0}")]
    UndefinedCorrelation(String),

    /// A label vector or decomposition violates its invariants.
    #[error("inconsistent labels: {0}")]
    Labels(String),

    /// Average precision is undefined (no positive labels).
    #[error("undefined average precision: {0}")]
    UndefinedAp(String),

    /// Training produced a non-finite loss.
    #[error("training diverged at epoch {epoch}: {detail}")]
    Diverged { epoch: usize, detail: String },

    /// A container file is malformed or has an unsupported version.
    #[error("bad container {path}: {detail}")]
    Container { path: String, detail: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn dimension(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Dimension { op, detail: detail.into() }
    }

    pub fn usage(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Usage { op, detail: detail.into() }
    }

    /// Stable one-word category used by the command line front end for
    /// machine-parseable error lines.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::Usage { .. } => "usage",
            Error::Config(_) => "config",
            Error::UndefinedCorrelation(_) => "correlation",
            Error::Labels(_) => "labels",
            Error::UndefinedAp(_) => "metric",
            Error::Diverged { .. } => "diverged",
            Error::Container { .. } => "container",
            Error::Io { .. } => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
