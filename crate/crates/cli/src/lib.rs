//! Library surface of the deltachi command-line tool.
//!
//! The commands live in [`run`] as plain functions returning exit codes and
//! rendered text, which keeps them drivable from integration tests; `main`
//! is a thin clap wrapper.

pub mod io;
pub mod run;
pub mod tables;
