//! Disk cache for computed superpolynomials.
//!
//! One JSON polynomial per key under a content-addressed directory: the
//! subdirectory name hashes the generator version, so fixing a formula
//! invalidates old entries wholesale. Writes go through a temp file and an
//! atomic rename; identical keys are deterministic, so last-writer-wins is
//! benign.

use super::{superpoly, ColorIndex, KnotId};
use crate::poly::{from_json, JsonPoly, LaurentPoly};
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Mutex;

/// Bump when any generator formula changes.
pub const GENERATOR_VERSION: &str = "supera-generators-v1";

pub struct SuperCache {
    dir: Option<PathBuf>,
    mem: Mutex<HashMap<String, LaurentPoly>>,
}

impl SuperCache {
    /// `dir = None` keeps the cache in memory only.
    pub fn new(dir: Option<PathBuf>) -> SuperCache {
        let dir = dir.map(|d| {
            let mut h = Sha256::new();
            h.update(GENERATOR_VERSION.as_bytes());
            let tag = hex_prefix(&h.finalize(), 16);
            d.join(tag)
        });
        SuperCache {
            dir,
            mem: Mutex::new(HashMap::new()),
        }
    }

    pub fn superpoly(&self, knot: KnotId, n: ColorIndex) -> LaurentPoly {
        let key = format!("{knot}_{}", n.n());
        self.cached(&key, || superpoly(knot, n))
    }

    pub fn cached(&self, key: &str, compute: impl FnOnce() -> LaurentPoly) -> LaurentPoly {
        if let Some(hit) = self.mem.lock().unwrap().get(key) {
            return hit.clone();
        }
        if let Some(p) = self.read_disk(key) {
            self.mem.lock().unwrap().insert(key.to_string(), p.clone());
            return p;
        }
        let p = compute();
        self.write_disk(key, &p);
        self.mem.lock().unwrap().insert(key.to_string(), p.clone());
        p
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    fn read_disk(&self, key: &str) -> Option<LaurentPoly> {
        let path = self.path(key)?;
        let text = std::fs::read_to_string(path).ok()?;
        from_json(&text).ok()
    }

    fn write_disk(&self, key: &str, p: &LaurentPoly) {
        let Some(path) = self.path(key) else {
            return;
        };
        let Some(dir) = path.parent() else { return };
        if std::fs::create_dir_all(dir).is_err() {
            return;
        }
        let json = serde_json::to_string(&JsonPoly::from_poly(p)).expect("serializable");
        if let Ok(mut tmp) = tempfile::NamedTempFile::new_in(dir) {
            if tmp.write_all(json.as_bytes()).is_ok() {
                let _ = tmp.persist(&path);
            }
        }
    }
}

fn hex_prefix(bytes: &[u8], len: usize) -> String {
    bytes
        .iter()
        .flat_map(|b| [b >> 4, b & 0xf])
        .take(len)
        .map(|n| char::from_digit(n as u32, 16).expect("hex digit"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SuperCache::new(Some(dir.path().to_path_buf()));
        let p = cache.superpoly(KnotId::Trefoil, ColorIndex::new(3));
        // a second cache instance must hit the disk entry
        let cache2 = SuperCache::new(Some(dir.path().to_path_buf()));
        let p2 = cache2.superpoly(KnotId::Trefoil, ColorIndex::new(3));
        assert_eq!(p, p2);
        let entries: Vec<_> = std::fs::read_dir(dir.path().join(
            std::fs::read_dir(dir.path())
                .unwrap()
                .next()
                .unwrap()
                .unwrap()
                .file_name(),
        ))
        .unwrap()
        .collect();
        assert_eq!(entries.len(), 1);
    }

    #[test]
    fn memory_only_cache() {
        let cache = SuperCache::new(None);
        let p = cache.superpoly(KnotId::FigureEight, ColorIndex::new(2));
        assert_eq!(p, super::super::superpoly_fig8(ColorIndex::new(2)));
        assert_eq!(p, cache.superpoly(KnotId::FigureEight, ColorIndex::new(2)));
    }
}
