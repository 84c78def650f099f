//! On-disk cache of `o_k`-tables, keyed by type and normalized heights.
//!
//! Each entry stores its payload next to a SHA-256 of the payload; entries
//! whose hash, key or cell coverage do not check out are recomputed.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use arq_core::DynkinQuiver;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub type OTable = BTreeMap<(usize, usize, i64), usize>;

const FORMAT: u32 = 1;

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
struct Key {
    format: u32,
    version: String,
    kind: String,
    datum: String,
    heights: String,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: Key,
    /// `[i, j, k, o]`, 1-based rows.
    cells: Vec<[i64; 4]>,
    sha256: String,
}

pub struct Cache {
    dir: Option<PathBuf>,
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Cache {
    pub fn from_env() -> Self {
        let dir = std::env::var_os("ARQ_CACHE_DIR").filter(|s| !s.is_empty()).map(PathBuf::from);
        Cache { dir }
    }

    fn key(q: &DynkinQuiver, kind: &str) -> Key {
        Key {
            format: FORMAT,
            version: env!("CARGO_PKG_VERSION").into(),
            kind: kind.into(),
            datum: q.datum.name(),
            heights: q.normalized().heights_string(),
        }
    }

    fn path(&self, key: &Key) -> Option<PathBuf> {
        let name = digest(serde_json::to_string(key).expect("key serializes").as_bytes());
        self.dir.as_ref().map(|d| d.join(format!("{}.json", &name[..32])))
    }

    /// Cached table for `q`, or `compute()` (stored afterwards). Complete
    /// tables only: every `i ≤ j` and `0 ≤ k ≤ h`.
    pub fn o_table(
        &self,
        q: &DynkinQuiver,
        kind: &str,
        compute: impl FnOnce() -> arq_core::Result<OTable>,
    ) -> arq_core::Result<OTable> {
        let key = Self::key(q, kind);
        let Some(path) = self.path(&key) else { return compute() };
        if let Some(t) = fs::read(&path).ok().and_then(|b| Self::load(&b, &key, q)) {
            return Ok(t);
        }
        let t = compute()?;
        let cells: Vec<[i64; 4]> = t.iter().map(|(&(i, j, k), &o)| [i as i64 + 1, j as i64 + 1, k, o as i64]).collect();
        let sha256 = digest(serde_json::to_string(&cells).expect("cells serialize").as_bytes());
        let entry = Entry { key, cells, sha256 };
        // a failed write only costs a recomputation next time
        if let Some(parent) = path.parent() {
            let _ = fs::create_dir_all(parent);
        }
        let _ = fs::write(&path, serde_json::to_vec(&entry).expect("entry serializes"));
        Ok(t)
    }

    fn load(bytes: &[u8], key: &Key, q: &DynkinQuiver) -> Option<OTable> {
        let e: Entry = serde_json::from_slice(bytes).ok()?;
        if &e.key != key || digest(serde_json::to_string(&e.cells).ok()?.as_bytes()) != e.sha256 {
            return None;
        }
        let n = q.rank() as i64;
        let h = q.datum.h as i64;
        let mut t = OTable::new();
        for [i, j, k, o] in e.cells {
            if !(1..=n).contains(&i) || !(i..=n).contains(&j) || !(0..=h).contains(&k) || o < 0 {
                return None;
            }
            t.insert((i as usize - 1, j as usize - 1, k), o as usize);
        }
        (t.len() as i64 == n * (n + 1) / 2 * (h + 1)).then_some(t)
    }
}
