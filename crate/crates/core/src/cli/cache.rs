//! On-disk cache of wall-crossing results: one JSON file per entry.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cli::document::{map_to_poly, poly_to_map};
use crate::invariants::InvariantKind;
use crate::ChiPoly;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "DTWC_CACHE_DIR";

/// Bumped whenever a change could alter a cached value.
pub const FORMULA_VERSION: &str = "wc1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub kind: String,
    pub r: u32,
    pub n: u32,
    pub version: String,
}

impl CacheKey {
    pub fn new(kind: InvariantKind, r: u32, n: u32) -> Self {
        Self {
            kind: kind.to_string(),
            r,
            n,
            version: FORMULA_VERSION.to_string(),
        }
    }

    fn file_name(&self) -> String {
        format!(
            "{}-r{}-n{}-{}.json",
            self.kind.to_lowercase(),
            self.r,
            self.n,
            self.version
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub value: BTreeMap<usize, String>,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// The directory from `flag`, else from the environment; `None` disables caching.
    pub fn configured(flag: Option<&Path>) -> Option<Self> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
            .filter(|p| !p.as_os_str().is_empty())
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// A stored value, if present and readable under the current version tag.
    /// Unreadable or mismatched files count as misses.
    pub fn get(&self, key: &CacheKey) -> Option<ChiPoly> {
        let text = fs::read_to_string(self.dir.join(key.file_name())).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if &entry.key != key {
            return None;
        }
        map_to_poly(&entry.value).ok()
    }

    pub fn put(&self, key: &CacheKey, value: &ChiPoly) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry {
            key: key.clone(),
            value: poly_to_map(value),
        };
        let text = serde_json::to_string(&entry).map_err(io::Error::other)?;
        // write-then-rename so concurrent readers never see a partial file
        let tmp = self
            .dir
            .join(format!(".{}.tmp{}", key.file_name(), std::process::id()));
        fs::write(&tmp, text)?;
        fs::rename(tmp, self.dir.join(key.file_name()))
    }

    /// Returns the cached value or computes, stores and returns it.
    pub fn get_or_compute<E>(
        &self,
        key: &CacheKey,
        compute: impl FnOnce() -> Result<ChiPoly, E>,
    ) -> Result<ChiPoly, E> {
        if let Some(hit) = self.get(key) {
            return Ok(hit);
        }
        let value = compute()?;
        if let Err(e) = self.put(key, &value) {
            eprintln!(
                "warning: could not write cache entry in {}: {e}",
                self.dir.display()
            );
        }
        Ok(value)
    }

    /// Removes every cache entry file; returns how many were removed.
    pub fn clear(&self) -> io::Result<usize> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(e) => e,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e),
        };
        let mut removed = 0;
        for entry in entries {
            let path = entry?.path();
            let is_entry = path.file_name().and_then(|n| n.to_str()).is_some_and(|n| {
                n.ends_with(".json") && (n.starts_with("dt-") || n.starts_with("eu-"))
            });
            if is_entry {
                fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn put_get_clear() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let key = CacheKey::new(InvariantKind::Dt, 2, 3);
        assert_eq!(cache.get(&key), None);
        let p = -ChiPoly::chi();
        cache.put(&key, &p).unwrap();
        assert_eq!(cache.get(&key), Some(p));
        let stale = CacheKey {
            version: "old".into(),
            ..key.clone()
        };
        assert_eq!(cache.get(&stale), None);
        assert_eq!(cache.clear().unwrap(), 1);
        assert_eq!(cache.get(&key), None);
    }
}
