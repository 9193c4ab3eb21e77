//! Datasets, experiment harness and command line for the label-consistent
//! k-center solvers in [`lckc_core`].
//!
//! - [`dataset`]: CSV loading with presets, normalization and temporal slicing.
//! - [`records`]: result files and labels files.
//! - [`config`]: TOML run files.
//! - [`harness`]: the new-data and evolving-data experiments and the bench.
//! - [`oracle_check`]: randomized checks against the brute-force oracle.
//! - [`cli`]: the `lckc` binary.

pub mod cli;
pub mod config;
pub mod dataset;
mod error;
pub mod harness;
pub mod oracle_check;
pub mod records;

pub use error::{Error, Result};
pub use lckc_core as core;
