//! Manifest loading, the built-in catalog and command dispatch behind the
//! `hopfcyc` binary.

pub mod builtin;
pub mod commands;
pub mod manifest;

pub use commands::{run, Command, Options, Outcome};
