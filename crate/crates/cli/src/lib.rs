//! Command-line front end: spectra, sampled wavefunctions and potentials,
//! table reproduction and validation suites, all driven by a serializable
//! [`RunManifest`] so that any run can be replayed byte for byte.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
mod commands;
mod format;
pub mod manifest;
mod validate;

pub use commands::{TABLE1_FILE, TABLE2_FILE};
pub use manifest::{
    execute, BranchArg, CommandKind, Format, Parameters, RunManifest, RunOutput, Suite,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("manifest error: {0}")]
    Manifest(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numerical(_) => 1,
            CliError::Invalid(_) | CliError::Manifest(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

impl From<isotonic::Error> for CliError {
    fn from(err: isotonic::Error) -> Self {
        use isotonic::Error as E;
        match err {
            E::InvalidParameter(_)
            | E::Domain { .. }
            | E::UnphysicalRegime(_)
            | E::NonFinite(_) => CliError::Invalid(err.to_string()),
            _ => CliError::Numerical(err.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
