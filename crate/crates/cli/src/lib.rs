//! Batch front end for the verification core: algebra files, check suites,
//! seeded searches and reports.

pub mod error;
pub mod findings;
pub mod format;
pub mod report;
pub mod search;
pub mod suite;

pub use error::CliError;
pub use format::AlgebraFile;
pub use report::RunReport;
