//! JSON formats, table rendering and the `bargain` command line.

pub mod cli;
pub mod formats;
pub mod render;
