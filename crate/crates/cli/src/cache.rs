//! Optional on-disk cache of sequence tables.
//!
//! A cache is never trusted as is: every entry is re-derived for its first
//! few terms when loaded, and anything unreadable or inconsistent is dropped
//! with a warning.

use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use franel_core::{Family, Integer, SequenceStore};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const CACHE_FORMAT: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheFile {
    pub format: u32,
    pub entries: Vec<CacheEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u64>,
    /// Exact decimal renderings, index 0 first.
    pub values: Vec<String>,
}

/// Seeds `store` from the cache at `path`. A missing file is not an error;
/// returns the warnings for anything discarded.
pub fn load_into(store: &SequenceStore, path: &Path) -> Vec<String> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == ErrorKind::NotFound => return Vec::new(),
        Err(e) => return vec![format!("ignoring cache {}: {e}", path.display())],
    };
    let file: CacheFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        Err(e) => return vec![format!("discarding corrupt cache {}: {e}", path.display())],
    };
    if file.format != CACHE_FORMAT {
        return vec![format!(
            "discarding cache {}: format {} is not {CACHE_FORMAT}",
            path.display(),
            file.format
        )];
    }
    let mut warnings = Vec::new();
    for entry in file.entries {
        if let Err(msg) = seed_entry(store, &entry) {
            warnings.push(format!("discarding cached {}: {msg}", entry.family));
        }
    }
    warnings
}

fn seed_entry(store: &SequenceStore, entry: &CacheEntry) -> std::result::Result<(), String> {
    let family = Family::from_parts(&entry.family, entry.m, entry.r).map_err(|e| e.to_string())?;
    let values = entry
        .values
        .iter()
        .map(|s| s.parse::<Integer>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    store.seed(family, values).map_err(|e| e.to_string())
}

/// Writes every table currently held by `store`.
pub fn save(store: &SequenceStore, path: &Path) -> Result<()> {
    let entries = store
        .snapshot()
        .into_iter()
        .map(|(family, values)| CacheEntry {
            family: family.name().to_string(),
            m: family.m(),
            r: family.r(),
            values: values.iter().map(ToString::to_string).collect(),
        })
        .collect();
    let file = CacheFile {
        format: CACHE_FORMAT,
        entries,
    };
    let text = serde_json::to_string(&file).map_err(|e| CliError::Internal(e.to_string()))?;
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
