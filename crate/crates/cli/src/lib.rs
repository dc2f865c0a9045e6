//! Command line front end: input files, commands and the bundled fixtures.

pub mod commands;
pub mod fixtures;
pub mod spec;
