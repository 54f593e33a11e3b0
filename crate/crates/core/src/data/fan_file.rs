use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::read_json;
use crate::error::{Error, Result};
use crate::fan::{canonical_divisor, is_ample, Fan, TorusDivisor};
use crate::lattice::LatticeVector;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanSchema {
    pub rank: usize,
    pub rays: Vec<LatticeVector>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_map: Option<IndexMap<String, LatticeVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mm_id: Option<String>,
    #[serde(default)]
    pub toric_fano: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// A fan read from disk together with its metadata.
pub struct FanFile {
    pub name: String,
    pub fan: Fan,
    pub mm_id: Option<String>,
    pub toric_fano: bool,
    pub note: String,
}

impl FanSchema {
    pub fn build(&self) -> Result<Fan> {
        for (k, r) in self.rays.iter().enumerate() {
            if !r.is_primitive() {
                return Err(Error::InvalidFan(format!("ray {k} = {r} is not primitive")));
            }
        }
        let fan = Fan::new(self.rank, self.rays.clone(), self.max_cones.clone())?;
        match &self.basis_map {
            None => Ok(fan),
            Some(map) => fan.with_basis(
                map.keys().cloned().collect(),
                map.values().map(|v| TorusDivisor::new(v.coords().to_vec())).collect(),
            ),
        }
    }
}

/// Reads a fan file; fans flagged `toric_fano` must be smooth, complete
/// and have `-K` ample.
pub fn load_fan_file(path: &Path) -> Result<FanFile> {
    let schema: FanSchema = read_json(path)?;
    let fan = schema.build().map_err(|e| Error::InvalidFan(format!("{}: {e}", path.display())))?;
    if schema.toric_fano {
        let report = fan.report();
        if !report.smooth || !report.complete {
            return Err(Error::InvalidFan(format!("{}: {}", path.display(), report.violations.join("; "))));
        }
        if !is_ample(&fan, &canonical_divisor(&fan))? {
            return Err(Error::InvalidFan(format!("{}: -K is not ample", path.display())));
        }
    }
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(FanFile { name, fan, mm_id: schema.mm_id, toric_fano: schema.toric_fano, note: schema.note })
}

pub fn load_fan(path: &Path) -> Result<Fan> {
    Ok(load_fan_file(path)?.fan)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_primitive_ray_rejected() {
        let s: FanSchema =
            serde_json::from_str(r#"{"rank": 1, "rays": [[2], [-1]], "max_cones": [[0], [1]]}"#).unwrap();
        assert!(matches!(s.build(), Err(Error::InvalidFan(m)) if m.contains("not primitive")));
    }

    #[test]
    fn unknown_fields_rejected() {
        let r: std::result::Result<FanSchema, _> =
            serde_json::from_str(r#"{"rank": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]], "oops": 1}"#);
        assert!(r.is_err());
    }

    #[test]
    fn basis_map_attaches_names() {
        let s: FanSchema = serde_json::from_str(
            r#"{"rank": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]], "basis_map": {"H": [1, 0]}}"#,
        )
        .unwrap();
        let f = s.build().unwrap();
        assert_eq!(f.basis().unwrap().names(), ["H"]);
    }
}
