//! Command-line front end for the `yolk` library.

pub mod args;
pub mod generate;
pub mod input;
pub mod run;
pub mod svg;

pub use args::Cli;
pub use run::{run, Failure};
