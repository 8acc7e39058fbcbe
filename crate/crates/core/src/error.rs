use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("node index {index} out of range for graph with {node_count} nodes")]
    NodeIndex { index: usize, node_count: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("undefined on this graph: {0}")]
    UndefinedGraph(String),

    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },

    #[error("unknown dataset `{0}` (not a file and not a bundled network)")]
    UnknownDataset(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
