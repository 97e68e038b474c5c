//! On-disk result cache. One JSON file per job, named by the SHA-256 of the
//! job description, carrying a manifest that is checked on every read.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Deserialize)]
struct Manifest {
    version: String,
    config_hash: String,
    config: String,
}

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    manifest: Manifest,
    payload: T,
}

pub struct Cache {
    dir: PathBuf,
    /// Recompute on hits and fail if the stored value differs.
    check: bool,
}

#[derive(Debug, PartialEq, Eq, Clone, Copy)]
pub enum Outcome {
    Hit,
    Miss,
    /// An entry existed but could not be trusted.
    Replaced,
}

fn hash(config: &str) -> String {
    let mut h = Sha256::new();
    h.update(VERSION.as_bytes());
    h.update([0]);
    h.update(config.as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

impl Cache {
    pub fn new(dir: &Path, check: bool) -> Result<Self> {
        fs::create_dir_all(dir)
            .with_context(|| format!("creating cache directory {}", dir.display()))?;
        Ok(Self {
            dir: dir.to_path_buf(),
            check,
        })
    }

    fn path(&self, h: &str) -> PathBuf {
        self.dir.join(format!("{h}.json"))
    }

    fn load<T: DeserializeOwned>(&self, config: &str, h: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(h)).ok()?;
        let e: Entry<T> = serde_json::from_str(&text).ok()?;
        let m = &e.manifest;
        (m.version == VERSION && m.config_hash == h && m.config == config).then_some(e.payload)
    }

    fn store<T: Serialize>(&self, config: &str, h: &str, payload: &T) -> Result<()> {
        let e = Entry {
            manifest: Manifest {
                version: VERSION.to_string(),
                config_hash: h.to_string(),
                config: config.to_string(),
            },
            payload,
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(&e)?.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(h))
            .with_context(|| format!("writing cache entry {h}"))?;
        Ok(())
    }

    /// Returns the cached payload for `config`, or computes and stores it.
    /// `valid` rejects payloads that parse but do not make sense.
    pub fn get_or_compute<T, F, V>(
        &self,
        config: &str,
        valid: V,
        compute: F,
    ) -> Result<(T, Outcome)>
    where
        T: Serialize + DeserializeOwned + PartialEq,
        F: FnOnce() -> Result<T>,
        V: Fn(&T) -> bool,
    {
        let h = hash(config);
        let existed = self.path(&h).exists();
        if let Some(v) = self.load::<T>(config, &h).filter(|v| valid(v)) {
            if self.check {
                let fresh = compute()?;
                anyhow::ensure!(
                    fresh == v,
                    "cached result for `{config}` differs from a fresh computation"
                );
            }
            return Ok((v, Outcome::Hit));
        }
        let v = compute()?;
        self.store(config, &h, &v)?;
        Ok((
            v,
            if existed {
                Outcome::Replaced
            } else {
                Outcome::Miss
            },
        ))
    }
}
