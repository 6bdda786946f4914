//! Command-line front end for `permuto-core`, plus the self-test and
//! acceptance criteria shared by the `selftest` command and the
//! `acceptance` test target.

pub mod args;
pub mod corpus;
pub mod criteria;
pub mod report;
pub mod run;

pub use args::{Cli, Command, Level, DEFAULT_SEED};
pub use report::Report;
pub use run::{error_code, run};
