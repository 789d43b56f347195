//! Command-line front-end for the `syncode` decoders.
//!
//! Each `cmd_*` function returns the text written to standard output. A
//! [`UsageError`] maps to exit code 2; a failed [`VerifyReport`] to exit code 1.

use std::fmt;

pub mod args;
pub mod codespec;
pub mod commands;
pub mod grid;

pub use codespec::{CodeSpec, FamilyName};
pub use commands::{cmd_bench, cmd_corrupt, cmd_decode, cmd_enumerate, cmd_verify, VerifyReport};
pub use grid::{parse_grid, GridPoint, DEFAULT_GRID};

/// Invalid arguments, parameters or input files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<syncode::Error> for UsageError {
    fn from(e: syncode::Error) -> Self {
        UsageError(e.to_string())
    }
}
