//! Command-line front end: input parsing, command dispatch and report
//! rendering for the brane-charge calculator.

pub mod app;
pub mod input;
pub mod report;

pub use app::{run, Outcome};
