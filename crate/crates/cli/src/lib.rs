//! Command-line front end for `cihom-core`: JSON ring and module files,
//! machine reports, and the bundled corpus runner.

pub mod app;
pub mod corpus;
pub mod files;
pub mod ops;
pub mod random;
pub mod report;

pub use app::{run, Output};
