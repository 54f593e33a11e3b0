use indexmap::IndexMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::DataDir;
use crate::chow::{
    blowup_curve, blowup_point, flag_w, hypersurface_chow, quadric3, quintic_v5, toric_chow, ChowModel3, CurveData,
};
use crate::class::ClassSpec;
use crate::error::{Error, Result};

/// How to build a [`ChowModel3`]; fan paths are relative to the data directory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelRecipe {
    Quadric3,
    FlagW,
    QuinticV5,
    Toric {
        fan: String,
    },
    Hypersurface {
        ambient: String,
        class: ClassSpec,
    },
    BlowupPoint {
        base: Box<ModelRecipe>,
        exceptional: String,
    },
    BlowupCurve {
        base: Box<ModelRecipe>,
        exceptional: String,
        degrees: IndexMap<String, i64>,
        genus: i64,
    },
}

impl ModelRecipe {
    /// Built-in models by name: `quadric3` (`Q`), `flag_w` (`W`), `quintic_v5` (`V5`).
    pub fn named(name: &str) -> Option<ModelRecipe> {
        match name {
            "quadric3" | "Q" => Some(ModelRecipe::Quadric3),
            "flag_w" | "flag_W" | "W" => Some(ModelRecipe::FlagW),
            "quintic_v5" | "quintic_V5" | "V5" => Some(ModelRecipe::QuinticV5),
            _ => None,
        }
    }

    pub fn build(&self, dir: &DataDir) -> Result<ChowModel3> {
        match self {
            ModelRecipe::Quadric3 => quadric3(),
            ModelRecipe::FlagW => flag_w(),
            ModelRecipe::QuinticV5 => quintic_v5(),
            ModelRecipe::Toric { fan } => toric_chow(&dir.fan(fan)?.fan),
            ModelRecipe::Hypersurface { ambient, class } => {
                let fan = dir.fan(ambient)?.fan;
                let basis = fan.basis().ok_or(Error::NoNamedBasis)?;
                let x = basis.divisor(&class.resolve(basis.names())?);
                hypersurface_chow(&fan, &x)
            }
            ModelRecipe::BlowupPoint { base, exceptional } => blowup_point(&base.build(dir)?, exceptional),
            ModelRecipe::BlowupCurve { base, exceptional, degrees, genus } => {
                let base = base.build(dir)?;
                let mut d = vec![0i64; base.rank()];
                for (name, &v) in degrees {
                    let k = base.names().iter().position(|n| n == name).ok_or_else(|| Error::UnknownName(name.clone()))?;
                    d[k] = v;
                }
                blowup_curve(&base, exceptional, &CurveData { degrees: d, genus: *genus })
            }
        }
    }

    /// Short one-line description.
    pub fn describe(&self) -> String {
        match self {
            ModelRecipe::Quadric3 => "Q".into(),
            ModelRecipe::FlagW => "W".into(),
            ModelRecipe::QuinticV5 => "V5".into(),
            ModelRecipe::Toric { fan } => format!("toric[{fan}]"),
            ModelRecipe::Hypersurface { ambient, class } => format!("({class}) in toric[{ambient}]"),
            ModelRecipe::BlowupPoint { base, exceptional } => format!("Bl_pt({}) with {exceptional}", base.describe()),
            ModelRecipe::BlowupCurve { base, exceptional, degrees, genus } => {
                let d: Vec<String> = degrees.iter().map(|(n, v)| format!("{n}.C={v}")).collect();
                format!("Bl_C({}) with {exceptional}, {}, g={genus}", base.describe(), d.join(" "))
            }
        }
    }
}

/// A claimed value of `chi(X, Omega^p (L))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiClaim {
    pub id: String,
    #[serde(default)]
    pub name: String,
    pub model: ModelRecipe,
    pub p: usize,
    #[serde(rename = "L")]
    pub l: ClassSpec,
    pub expected: i64,
}

impl ChiClaim {
    pub fn evaluate(&self, dir: &DataDir) -> Result<BigInt> {
        let m = self.model.build(dir)?;
        let l = self.l.resolve(m.names())?;
        crate::chow::chi_twisted(&m, self.p, &l)
    }
}
