//! Library side of the `chi-config` command line: document parsing, the
//! command runner and the verification suite.

use std::path::PathBuf;

use thiserror::Error;

pub mod app;
pub mod document;
pub mod verify;

pub use app::{run, Outcome};
pub use document::{emit_document, parse_complex, parse_document, ComplexDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] chi_config::Error),
}
