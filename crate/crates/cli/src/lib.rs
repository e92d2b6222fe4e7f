//! Library side of the `matchroot` binary: input parsing, the per-graph
//! commands, the fixture set and verification campaigns.

pub mod campaign;
pub mod commands;
pub mod dot;
pub mod fixtures;
pub mod input;

use matchroot::exactpoly::PolyError;
use matchroot::graph::GraphError;
use matchroot::structure::StructureError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> CliError {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
