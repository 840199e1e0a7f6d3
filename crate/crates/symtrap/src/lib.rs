//! Command-line front end for `symtrap-core`: every table, spectrum and
//! adiabatic map as text, CSV or JSON.

pub mod cli;
pub mod commands;
pub mod error;
pub mod report;

pub use error::{CliError, CliResult};
pub use report::{Cell, Format, Report};
