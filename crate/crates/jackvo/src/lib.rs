//! Command-line front end, JSON formats, on-disk cache and verification
//! suites for `jackvo-core`.

pub mod cache;
pub mod commands;
pub mod format;
pub mod store;
pub mod suites;

pub use cache::{DiskCache, JackCache, Norm};
pub use format::{Basis, Coefficient, SerializedCoeff, SerializedLRReport, SerializedSymFun};
pub use suites::{Context, Suite, SuiteParams, SuiteReport};
