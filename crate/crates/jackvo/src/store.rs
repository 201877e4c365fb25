//! Per-case JSON records for verification runs.

use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::cache::write_atomic;

#[derive(Clone, Debug)]
pub struct ReportStore {
    root: PathBuf,
}

impl ReportStore {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        ReportStore { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// `root/reports/<suite>/<case>.json`, case ids reduced to a safe alphabet.
    pub fn path(&self, suite: &str, case: &str) -> PathBuf {
        let safe: String = case.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' }).collect();
        self.root.join("reports").join(suite).join(format!("{}.json", safe))
    }

    pub fn write<T: Serialize>(&self, suite: &str, case: &str, record: &T) -> std::io::Result<PathBuf> {
        let path = self.path(suite, case);
        let bytes = serde_json::to_vec_pretty(record).map_err(std::io::Error::other)?;
        write_atomic(&path, &bytes)?;
        Ok(path)
    }
}
