//! Command-line front end for `scss-core`.

pub mod bench;
pub mod commands;
pub mod error;
pub mod files;

pub use error::{CliError, CliResult, EXIT_GUARD, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};
