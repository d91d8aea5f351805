//! Content-addressed result cache.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::job::JobSpec;

/// sha256 of the canonical job echo plus the engine version.
pub fn cache_key(job: &JobSpec) -> String {
    let body = json!({ "engine": flaghg_core::VERSION, "job": job.echo() });
    hex::encode(Sha256::digest(body.to_string().as_bytes()))
}

pub enum Lookup {
    Hit(Value),
    Miss,
    /// The entry exists but could not be used.
    Corrupt(String),
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", key))
    }

    pub fn get(&self, key: &str) -> Lookup {
        let path = self.path(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupt(format!("{}: {}", path.display(), e)),
        };
        let v: Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => return Lookup::Corrupt(format!("{}: {}", path.display(), e)),
        };
        if v.get("key").and_then(Value::as_str) != Some(key) || v.get("engine").and_then(Value::as_str) != Some(flaghg_core::VERSION) {
            return Lookup::Corrupt(format!("{}: key or engine mismatch", path.display()));
        }
        match v.get("payload") {
            Some(p) => Lookup::Hit(p.clone()),
            None => Lookup::Corrupt(format!("{}: no payload", path.display())),
        }
    }

    /// Writes through a temporary file so readers never see a partial entry.
    pub fn put(&self, key: &str, payload: &Value) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = json!({ "engine": flaghg_core::VERSION, "key": key, "payload": payload });
        let tmp = self.dir.join(format!(".{}.{}.tmp", key, std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(&entry)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path(key))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}
