//! Line-oriented formats and subcommands behind the `fpfi` binary.

pub mod bench;
pub mod commands;
mod error;
pub mod format;

pub use error::CliError;
pub use format::OutputFormat;
