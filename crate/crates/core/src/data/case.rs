use indexmap::IndexMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::recipe::{ChiClaim, ModelRecipe};
use crate::class::ClassSpec;
use crate::error::{Error, Result};

/// Intersection numbers of basis divisors with the curves spanning the
/// cone of curves; `rows[name][j] = D_name . curves[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveTable {
    pub curves: Vec<String>,
    pub rows: IndexMap<String, Vec<i64>>,
}

impl CurveTable {
    /// Checks the rows match `basis` in order and every row has one entry per curve.
    pub fn check(&self, basis: &[String]) -> Result<()> {
        let names: Vec<&String> = self.rows.keys().collect();
        if names.len() != basis.len() || names.iter().zip(basis).any(|(a, b)| *a != b) {
            return Err(Error::Schema(format!("curve table rows {names:?} do not match basis {basis:?}")));
        }
        for (name, row) in &self.rows {
            if row.len() != self.curves.len() {
                return Err(Error::Schema(format!(
                    "row {name} has {} entries for {} curves",
                    row.len(),
                    self.curves.len()
                )));
            }
        }
        if self.curves.is_empty() {
            return Err(Error::Schema("no curves".into()));
        }
        Ok(())
    }

    /// Curve `j` as a vector of pairings with the basis.
    pub fn curve(&self, j: usize) -> Vec<BigInt> {
        self.rows.values().map(|r| BigInt::from(r[j])).collect()
    }

    /// `D . curves[j]` for each `j`.
    pub fn pairings(&self, d: &[BigInt]) -> Vec<BigInt> {
        (0..self.curves.len()).map(|j| self.curve(j).iter().zip(d).map(|(a, b)| a * b).sum()).collect()
    }
}

/// A Chow model realising the case, compared with the invariant table row `mm_id`.
/// With `same_basis` the model's basis is the case basis and its `c_1` must be `-K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Construction {
    pub model: ModelRecipe,
    pub same_basis: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// Restriction of classes on the toric ambient to a toric surface `S_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Restriction {
    pub surface: String,
    pub map: IndexMap<String, ClassSpec>,
    /// Expected restriction of `L - S_2`, claimed ample.
    pub ample: ClassSpec,
    /// Expected restriction of `L - S_1 - S_2`, claimed nef.
    pub nef: ClassSpec,
}

/// `X` is cut out of the toric 3-fold `ambient` by `S_1` and `S_2`, with `L = -K_X` pulled back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CiData {
    #[serde(rename = "fan")]
    pub ambient: String,
    #[serde(rename = "S1")]
    pub s1: ClassSpec,
    #[serde(rename = "S2")]
    pub s2: ClassSpec,
    #[serde(rename = "L")]
    pub l: ClassSpec,
    pub part: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restriction: Option<Restriction>,
}

/// A fact about a class on a toric variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "expect", rename_all = "snake_case", deny_unknown_fields)]
pub enum AmbientFact {
    Ample { fan: String, class: ClassSpec },
    Nef { fan: String, class: ClassSpec },
    NefNotAmple { fan: String, class: ClassSpec },
    NefCone { fan: String, generators: Vec<ClassSpec> },
    /// `H^j(Omega^p(class)) = 0` for `j > 0`.
    Bott { fan: String, class: ClassSpec, p: usize },
    /// `H^j(Omega^p(class)) = 0` for `j > p`.
    NefVanishing { fan: String, class: ClassSpec, p: usize },
}

impl AmbientFact {
    pub fn fan(&self) -> &str {
        match self {
            AmbientFact::Ample { fan, .. }
            | AmbientFact::Nef { fan, .. }
            | AmbientFact::NefNotAmple { fan, .. }
            | AmbientFact::NefCone { fan, .. }
            | AmbientFact::Bott { fan, .. }
            | AmbientFact::NefVanishing { fan, .. } => fan,
        }
    }
}

/// One case: a Fano 3-fold with its curve cone and claimed nef monoid,
/// plus whatever supporting data applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    pub id: String,
    /// Whether Bott vanishing is claimed for this case.
    pub bott_vanishing: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    #[serde(rename = "picard_basis")]
    pub basis: Vec<String>,
    #[serde(rename = "minus_K")]
    pub minus_k: ClassSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curves: Option<CurveTable>,
    #[serde(default, rename = "claimed_nef_generators", skip_serializing_if = "Vec::is_empty")]
    pub nef_generators: Vec<ClassSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_ample: Option<ClassSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus_k_unit_degree: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constructions: Vec<Construction>,
    #[serde(default, rename = "toric_ambient", skip_serializing_if = "Option::is_none")]
    pub complete_intersection: Option<CiData>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ambient_facts: Vec<AmbientFact>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chi_evidence: Vec<ChiClaim>,
    /// Fan of the variety itself when it is toric.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub toric_fan: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assumed: Vec<String>,
}

impl CaseFile {
    pub fn class(&self, c: &ClassSpec) -> Result<Vec<BigInt>> {
        c.resolve(&self.basis)
    }

    /// The table id without parentheses, e.g. `3_20`.
    pub fn file_key(&self) -> String {
        self.id.trim_start_matches('(').trim_end_matches(')').replace('.', "_")
    }
}
