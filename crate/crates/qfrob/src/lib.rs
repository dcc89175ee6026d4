//! Fixtures, verification suites, reports and the `qfrob` command line on
//! top of [`qfrob_core`].

pub mod cli;
pub mod expr;
pub mod fixture;
pub mod json;
pub mod report;
pub mod suites;

pub use fixture::FixtureError;
pub use report::{CheckRecord, Report, Status};
pub use suites::{run_suite, RunConfig, Suite, DEFAULT_SEED};
