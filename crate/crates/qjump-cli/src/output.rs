//! Atomic CSV/JSON writing and the run manifest that accompanies every
//! output file.

use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::RunConfig;

/// 17 significant digits, locale-independent.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Write bytes to a temporary sibling and rename into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), String> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .map_err(|e| format!("cannot create {}: {e}", parent.display()))?;
        }
    }
    let tmp = path.with_extension(format!(
        "{}.tmp-{}",
        path.extension().and_then(|e| e.to_str()).unwrap_or("out"),
        std::process::id()
    ));
    std::fs::write(&tmp, bytes).map_err(|e| format!("cannot write {}: {e}", tmp.display()))?;
    std::fs::rename(&tmp, path)
        .map_err(|e| format!("cannot rename {} -> {}: {e}", tmp.display(), path.display()))?;
    Ok(())
}

#[derive(Serialize)]
pub struct Manifest<'a> {
    pub command: &'a str,
    pub config: &'a RunConfig,
    pub version: &'a str,
    /// Provenance per value column of the paired file.
    pub provenance: Vec<String>,
    /// Neglected-tail bound e^{-lambda T} of every time-averaged quantity.
    pub tail_bound: f64,
    pub wall_clock_seconds: f64,
    pub warnings: Vec<String>,
}

pub fn manifest_path(data_path: &Path) -> PathBuf {
    let stem = data_path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("output");
    data_path.with_file_name(format!("{stem}.manifest.json"))
}

pub fn write_manifest(data_path: &Path, manifest: &Manifest) -> Result<(), String> {
    let json = serde_json::to_string_pretty(manifest).map_err(|e| e.to_string())?;
    write_atomic(&manifest_path(data_path), json.as_bytes())
}

/// Assemble a CSV document from a header and rows.
pub fn csv_document(header: &[&str], rows: &[Vec<String>]) -> Vec<u8> {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out.into_bytes()
}
