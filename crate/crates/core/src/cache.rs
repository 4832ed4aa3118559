//! Content-addressed result cache on disk.

use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub struct ResultCache {
    dir: PathBuf,
}

/// Hash of the operation, its canonical input, and the library version.
pub fn cache_key(operation: &str, canonical_input: &str) -> String {
    let mut h = Sha256::new();
    for part in [crate::VERSION, operation, canonical_input] {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part.as_bytes());
    }
    hex::encode(h.finalize())
}

impl ResultCache {
    pub fn open(dir: impl AsRef<Path>) -> std::io::Result<ResultCache> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(ResultCache { dir: dir.as_ref().to_path_buf() })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)).ok()
    }

    /// Write to a temporary file in the same directory, then rename over the
    /// final name so readers never see a partial entry.
    pub fn put(&self, key: &str, value: &str) -> std::io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(value.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }

    /// Cached value for `key`, computing and storing it on a miss.
    pub fn get_or_insert_with<E>(&self, key: &str, f: impl FnOnce() -> Result<String, E>) -> Result<String, E> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = f()?;
        // a failed write only costs a recomputation later
        let _ = self.put(key, &v);
        Ok(v)
    }
}
