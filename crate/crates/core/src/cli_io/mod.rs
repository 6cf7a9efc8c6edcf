//! Configuration files, CSV/SVG output and the command-line front end.

pub mod cli;
pub mod config;
pub mod export;
pub mod plot;

use std::path::PathBuf;

use thiserror::Error;

use crate::error::GaitError;

pub use config::{load_config, parse_config, RunConfig};
pub use export::{export_events, export_samples, export_sweep, read_samples};
pub use plot::{plot_samples, plot_sweep, PlotKind};

#[derive(Debug, Error)]
pub enum IoError {
    /// Malformed configuration text. The message carries line and column.
    #[error("config parse error: {0}")]
    Parse(String),

    #[error("invalid config: `{field}` {reason}")]
    Invalid { field: String, reason: String },

    #[error("{}: {source}", path.display())]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed CSV at line {line}: {reason}")]
    Csv { line: usize, reason: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Gait(#[from] GaitError),
}

impl IoError {
    pub(crate) fn file(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        IoError::File {
            path: path.into(),
            source,
        }
    }
}
