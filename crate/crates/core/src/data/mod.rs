//! Bundled data: the invariant table, fan files, case files and
//! counterexample claims.

use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod case;
mod fan_file;
mod invariants;
mod recipe;

pub use case::{AmbientFact, CaseFile, CiData, Construction, CurveTable, Restriction};
pub use fan_file::{load_fan, load_fan_file, FanFile, FanSchema};
pub use invariants::{
    load_invariant_table, parse_invariant_table, parse_rows, screen_nonnegative, InvariantRecord, Screen, TABLE_ROWS,
};
pub use recipe::{ChiClaim, ModelRecipe};

pub(crate) fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|source| Error::Json { path: path.to_path_buf(), source })
}

pub fn load_case(path: &Path) -> Result<CaseFile> {
    read_json(path)
}

/// One entry of `manifest.json`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub kind: String,
    pub source: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CounterexampleFile {
    pub claims: Vec<ChiClaim>,
}

/// A data directory laid out as `mm105.tsv`, `fans/`, `cases/`,
/// `counterexamples.json` and `manifest.json`.
#[derive(Clone, Debug)]
pub struct DataDir {
    root: PathBuf,
}

impl DataDir {
    pub fn new(root: impl Into<PathBuf>) -> DataDir {
        DataDir { root: root.into() }
    }

    /// `$BOTT_DATA_DIR`, falling back to the data directory shipped with the source.
    pub fn bundled() -> DataDir {
        match std::env::var_os("BOTT_DATA_DIR") {
            Some(p) => DataDir::new(p),
            None => DataDir::new(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")),
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path(&self, rel: &str) -> PathBuf {
        self.root.join(rel)
    }

    /// Loads a fan by relative path, or by bare name from `fans/`.
    pub fn fan(&self, name: &str) -> Result<FanFile> {
        let rel = if name.ends_with(".json") { name.to_string() } else { format!("fans/{name}.json") };
        load_fan_file(&self.path(&rel))
    }

    pub fn invariant_table(&self) -> Result<Vec<InvariantRecord>> {
        load_invariant_table(&self.path("mm105.tsv"))
    }

    pub fn manifest(&self) -> Result<IndexMap<String, ManifestEntry>> {
        read_json(&self.path("manifest.json"))
    }

    fn json_files(&self, sub: &str) -> Result<Vec<PathBuf>> {
        let dir = self.path(sub);
        let rd = std::fs::read_dir(&dir).map_err(|source| Error::Io { path: dir.clone(), source })?;
        let mut out = Vec::new();
        for e in rd {
            let p = e.map_err(|source| Error::Io { path: dir.clone(), source })?.path();
            if p.extension().is_some_and(|x| x == "json") {
                out.push(p);
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn fan_files(&self) -> Result<Vec<FanFile>> {
        self.json_files("fans")?.iter().map(|p| load_fan_file(p)).collect()
    }

    pub fn toric_fano_fans(&self) -> Result<Vec<FanFile>> {
        Ok(self.fan_files()?.into_iter().filter(|f| f.toric_fano).collect())
    }

    pub fn cases(&self) -> Result<Vec<CaseFile>> {
        self.json_files("cases")?.iter().map(|p| load_case(p)).collect()
    }

    /// Finds a case by id, accepting `(3.20)`, `3.20` or `3_20`.
    pub fn case(&self, id: &str) -> Result<CaseFile> {
        let key = id.trim_start_matches('(').trim_end_matches(')').replace('.', "_");
        let path = self.path(&format!("cases/{key}.json"));
        if !path.exists() {
            return Err(Error::Schema(format!("no case file for {id}")));
        }
        load_case(&path)
    }

    pub fn counterexamples(&self) -> Result<Vec<ChiClaim>> {
        Ok(read_json::<CounterexampleFile>(&self.path("counterexamples.json"))?.claims)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table_loads() {
        let rows = DataDir::bundled().invariant_table().unwrap();
        assert_eq!(rows.len(), TABLE_ROWS);
    }

    #[test]
    fn missing_file_is_io_error() {
        let d = DataDir::new("/nonexistent");
        assert!(matches!(d.invariant_table(), Err(Error::Io { .. })));
        assert!(d.case("(2.30)").is_err());
    }

    #[test]
    fn manifest_lists_every_file() {
        let d = DataDir::bundled();
        let m = d.manifest().unwrap();
        let mut files = vec!["mm105.tsv".to_string(), "counterexamples.json".to_string()];
        for sub in ["fans", "cases"] {
            for p in d.json_files(sub).unwrap() {
                files.push(format!("{sub}/{}", p.file_name().unwrap().to_string_lossy()));
            }
        }
        for f in &files {
            assert!(m.contains_key(f), "{f} missing from manifest");
        }
        for k in m.keys() {
            assert!(d.path(k).exists(), "{k} listed but absent");
        }
    }
}
