//! Command-line front end: configuration parsing and the run driver behind
//! the `ctb-ks` binary.

pub mod config;
pub mod runner;

pub use config::{parse_config, ConfigError, RunConfig, Sweep, SweepParam};
pub use runner::{execute, execute_all, GreEntry, RunError, RunSummary, Status, Timings};
