//! Command-line front end: presentation file format, command dispatch, and
//! deterministic reports. The binary in `main.rs` is a thin wrapper so the
//! whole surface stays testable in-process.

pub mod cli;
pub mod presentation;
pub mod runner;

pub use cli::Cli;
pub use runner::{execute, Outcome};
