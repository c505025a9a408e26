//! Configuration, documents and files.

mod chart_doc;
mod config;
mod mesh;
mod report;

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

pub use chart_doc::{deserialize_chart, deserialize_charts, serialize_chart, serialize_charts, CHART_SCHEMA, CHART_VERSION};
pub use config::{Precision, RunConfig, PRECISION_ENV};
pub use mesh::{export_mesh, MeshGrid, MeshMode};
pub use report::{Check, Report};

/// Shortest decimal string that parses back to the same `f64`.
pub fn dec(x: f64) -> String {
    format!("{x:e}")
}

pub fn parse_dec(s: &str) -> Result<f64> {
    s.trim().parse().map_err(|_| Error::Schema(format!("not a decimal number: {s:?}")))
}

/// Writes `contents` to a sibling temporary file and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}
