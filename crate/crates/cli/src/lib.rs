//! Command-line front end for `cfext-core`.

pub mod commands;
pub mod parse;
pub mod record;

pub use commands::{run, Cli, CliError, Command};
pub use record::{Format, OutputRecord};
