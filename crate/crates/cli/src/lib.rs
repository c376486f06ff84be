//! Command-line front end for the fractional growth model.
//!
//! The binary is a thin wrapper around [`run`]; everything that reads or
//! writes files lives here so it can be tested without a subprocess.

// `!(x > 0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bundle;
pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod io;

pub use bundle::ResultBundle;
pub use cli::Cli;
pub use commands::run;
pub use config::RunConfig;
pub use error::CliError;
pub use io::load_observations;
