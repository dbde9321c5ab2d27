//! Command-line front end: sequence printing, verification suites,
//! conjecture scans and the enumeration oracle.

pub mod cache;
pub mod error;
pub mod parallel;
pub mod report;
pub mod scan;
pub mod suites;

pub use error::{CliError, Result};
pub use report::ScanReport;
pub use scan::{run_scan, Conjecture, ScanConfig};
pub use suites::{run_verify, Suite, VerifyConfig};
