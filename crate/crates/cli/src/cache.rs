//! On-disk cache of character tables and fusion rings, keyed by group spec.
//!
//! Verification is never cached. Unreadable or stale entries count as misses.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use chaingroup_core::charmod::ModularCharacterTable;
use chaingroup_core::fusion::FusionRing;
use chaingroup_core::groups::GroupSpec;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::formats::{canonical_spec, FusionJson, TableJson};
use crate::CliError;

pub const CACHE_DIR_ENV: &str = "CHAINGROUP_CACHE_DIR";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    spec: String,
    table: TableJson,
    fusion: FusionJson,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Hex SHA-256 of the toolkit version and the canonical spec.
    pub fn key(spec: &GroupSpec) -> String {
        let mut h = Sha256::new();
        h.update(VERSION.as_bytes());
        h.update(b"\n");
        h.update(canonical_spec(spec).as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, spec: &GroupSpec) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(spec)))
    }

    pub fn load(&self, spec: &GroupSpec) -> Option<(ModularCharacterTable, FusionRing)> {
        let text = fs::read_to_string(self.path(spec)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.version != VERSION || entry.spec != canonical_spec(spec) {
            return None;
        }
        let table = entry.table.into_table().ok()?;
        let ring = entry.fusion.into_ring_unvalidated().ok()?;
        Some((table, ring))
    }

    /// Writes through a temporary file so concurrent readers never see a
    /// partial entry.
    pub fn store(
        &self,
        spec: &GroupSpec,
        table: &ModularCharacterTable,
        ring: &FusionRing,
    ) -> Result<(), CliError> {
        let io = |e: std::io::Error| CliError::Cache(format!("{}: {e}", self.dir.display()));
        fs::create_dir_all(&self.dir).map_err(io)?;
        let entry = Entry {
            version: VERSION.to_string(),
            spec: canonical_spec(spec),
            table: table.into(),
            fusion: ring.into(),
        };
        let text = serde_json::to_string(&entry).expect("cache entries serialize");
        let target = self.path(spec);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io)?;
        tmp.write_all(text.as_bytes()).map_err(io)?;
        tmp.persist(target).map_err(|e| io(e.error))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chaingroup_core::charmod::character_table_mod_p;
    use chaingroup_core::fusion::fusion_from_character_table;
    use chaingroup_core::groups::DEFAULT_ORDER_BOUND;

    #[test]
    fn key_depends_on_spec_only() {
        let a = GroupSpec::named("cyclic", &[6]);
        assert_eq!(
            Cache::key(&a),
            Cache::key(&GroupSpec::named("cyclic", &[6]))
        );
        assert_ne!(
            Cache::key(&a),
            Cache::key(&GroupSpec::named("cyclic", &[7]))
        );
        assert_eq!(Cache::key(&a).len(), 64);
    }

    #[test]
    fn store_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let spec = GroupSpec::named("dicyclic", &[3]);
        assert!(cache.load(&spec).is_none());
        let g = spec.build(DEFAULT_ORDER_BOUND).unwrap();
        let table = character_table_mod_p(&g, &g.conjugacy_classes()).unwrap();
        let ring = fusion_from_character_table(&table).unwrap();
        cache.store(&spec, &table, &ring).unwrap();
        let (t2, r2) = cache.load(&spec).unwrap();
        assert_eq!(t2, table);
        assert_eq!(r2, ring);
    }

    #[test]
    fn corrupt_entry_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let spec = GroupSpec::named("cyclic", &[3]);
        fs::write(cache.path(&spec), "{not json").unwrap();
        assert!(cache.load(&spec).is_none());
    }
}
