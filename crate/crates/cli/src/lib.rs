//! File formats and the `linedigraph` command-line front end.

pub mod cli;
pub mod formats;

pub use cli::run;
