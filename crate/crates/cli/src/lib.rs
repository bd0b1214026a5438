//! Command-line harness: exact values against closed forms, table
//! reproduction, verification suites and scans.

pub mod app;
pub mod config;
pub mod output;
pub mod record;
pub mod scan;
pub mod store;
pub mod table;
pub mod verify;

pub use app::{run, Cli, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
pub use config::RunConfig;
pub use output::OutputFormat;
pub use record::{compute, evaluate, ScanRecord};
pub use store::TableStore;

#[cfg(test)]
mod tests;
