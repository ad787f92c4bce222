//! File formats, seeded instance generation, verification and the command
//! line front end for `mgbracket`.

pub mod commands;
pub mod graph_format;
pub mod random;
pub mod report;
pub mod verify;

pub use commands::{run, CliError};
