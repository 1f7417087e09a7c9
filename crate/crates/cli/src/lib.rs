//! Command line, file formats and report serialization for `sgut-core`.

pub mod args;
pub mod commands;
pub mod input;
pub mod report;

pub use commands::{run, Outcome};
