use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chow::chi_tangent_screen;
use crate::error::{Error, Result};

pub const TABLE_ROWS: usize = 105;

/// One deformation class: `(-K)^3`, Picard number and `h^{2,1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub id: String,
    pub degree: i64,
    pub b2: i64,
    pub h21: i64,
}

impl InvariantRecord {
    pub fn chi_tangent(&self) -> Result<i64> {
        chi_tangent_screen(self.degree, self.b2, self.h21)
    }
}

pub fn load_invariant_table(path: &Path) -> Result<Vec<InvariantRecord>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_invariant_table(&text)
}

/// Parses a TSV with header `id degree b2 h21` and checks it has the
/// expected 105 distinct rows with even positive degrees.
pub fn parse_invariant_table(text: &str) -> Result<Vec<InvariantRecord>> {
    let records = parse_rows(text)?;
    if records.len() != TABLE_ROWS {
        return Err(Error::InvariantTable(format!("expected {TABLE_ROWS} rows, found {}", records.len())));
    }
    Ok(records)
}

/// Parses and validates rows without the row-count check.
pub fn parse_rows(text: &str) -> Result<Vec<InvariantRecord>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut rdr = csv::ReaderBuilder::new().delimiter(b'\t').trim(csv::Trim::All).from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| Error::InvariantTable(e.to_string()))?.clone();
    let want = ["id", "degree", "b2", "h21"];
    if header.iter().collect::<Vec<_>>() != want {
        return Err(Error::InvariantTable(format!("header must be {}", want.join("\t"))));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (line, row) in rdr.deserialize::<InvariantRecord>().enumerate() {
        let r = row.map_err(|e| Error::InvariantTable(format!("row {}: {e}", line + 1)))?;
        if !seen.insert(r.id.clone()) {
            return Err(Error::InvariantTable(format!("duplicate id {}", r.id)));
        }
        if r.degree <= 0 || r.degree % 2 != 0 {
            return Err(Error::InvariantTable(format!("{}: degree {} is not even and positive", r.id, r.degree)));
        }
        if r.b2 < 1 || r.h21 < 0 {
            return Err(Error::InvariantTable(format!("{}: bad b2 {} or h21 {}", r.id, r.b2, r.h21)));
        }
        out.push(r);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Screen {
    pub negative: Vec<String>,
    pub nonnegative: Vec<String>,
}

/// Splits records by the sign of `chi(X, T_X)`.
pub fn screen_nonnegative(records: &[InvariantRecord]) -> Result<Screen> {
    let mut s = Screen { negative: Vec::new(), nonnegative: Vec::new() };
    for r in records {
        if r.chi_tangent()? < 0 {
            s.negative.push(r.id.clone());
        } else {
            s.nonnegative.push(r.id.clone());
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_table() {
        let e = parse_invariant_table("").unwrap_err();
        assert_eq!(e.to_string(), "invariant table: expected 105 rows, found 0");
    }

    #[test]
    fn projective_space_row() {
        let rows = parse_rows("id\tdegree\tb2\th21\n(1.17)\t64\t1\t0\n").unwrap();
        assert_eq!(rows[0].chi_tangent().unwrap(), 15);
    }

    #[test]
    fn synthetic_screen() {
        let r = InvariantRecord { id: "x".into(), degree: 36, b2: 1, h21: 0 };
        let s = screen_nonnegative(&[r]).unwrap();
        assert_eq!(s.nonnegative, vec!["x".to_string()]);
    }

    #[test]
    fn rejects_bad_rows() {
        let dup = "id\tdegree\tb2\th21\n(1.1)\t2\t1\t52\n(1.1)\t2\t1\t52\n";
        assert!(parse_rows(dup).unwrap_err().to_string().contains("duplicate id (1.1)"));
        let odd = "id\tdegree\tb2\th21\n(1.1)\t3\t1\t52\n";
        assert!(parse_rows(odd).unwrap_err().to_string().contains("not even"));
        assert!(parse_rows("a\tb\n1\t2\n").is_err());
        assert!(parse_rows("id\tdegree\tb2\th21\n(1.1)\tx\t1\t0\n").is_err());
    }
}
