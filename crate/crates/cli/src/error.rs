use std::path::PathBuf;

use gbg_core::complex::ComplexError;
use gbg_core::gog::GogError;
use gbg_core::graph::GraphError;
use gbg_core::homology::HomologyError;
use gbg_core::presentation::PresentationError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Gog(#[from] GogError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("{0}")]
    Usage(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    /// 2 for bad input, 3 when an internal cross-check failed.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_)
            | CliError::Homology(_)
            | CliError::Complex(ComplexError::Internal(_))
            | CliError::Gog(GogError::ShapeMismatch(_))
            | CliError::Gog(GogError::Complex(ComplexError::Internal(_))) => 3,
            _ => 2,
        }
    }
}
