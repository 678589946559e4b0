//! Library half of the `ncrw` binary: argument definitions, command dispatch and the
//! acceptance battery shared by `ncrw paper-suite` and the acceptance test target.

pub mod args;
mod error;
pub mod run;
pub mod suite;

pub use error::CliError;
pub use run::{render_text, run, Report, Status};
