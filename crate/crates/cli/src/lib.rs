//! JSON formats, result cache and batch runner for `chaingroup-core`.
//!
//! The `chaingroup` binary is a thin clap wrapper over [`runner`].

pub mod cache;
pub mod formats;
pub mod reports;
pub mod runner;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or inconsistent user input.
    #[error("input: {0}")]
    Input(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Core(#[from] chaingroup_core::Error),
}

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const STATEMENT_FAILURE: u8 = 1;
    pub const INPUT_ERROR: u8 = 2;
}
