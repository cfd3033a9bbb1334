//! File formats, benchmarks and the command line around `nhood-core`.

pub mod bench;
pub mod cli;
mod error;
pub mod io;
pub mod parallel;
pub mod report;
pub mod speedup;
pub mod strategy;
pub mod sweep;

pub use error::{CliError, Result};
