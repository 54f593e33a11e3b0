use serde::{Deserialize, Serialize};

use super::{Cohomology, CohomologyVector};
use crate::error::{Error, Result};
use crate::fan::{is_ample, Fan, TorusDivisor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub i: usize,
    pub j: usize,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafReport {
    pub sheaf: String,
    pub dims: Vec<u64>,
    pub vanishing: bool,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottReport {
    pub pass: bool,
    pub sheaves: Vec<SheafReport>,
}

impl BottReport {
    pub fn failures(&self) -> impl Iterator<Item = &Failure> {
        self.sheaves.iter().flat_map(|s| s.failures.iter())
    }
}

impl<'a> Cohomology<'a> {
    /// `h^j(Omega^i (D)) = 0` for every `i` and every `j > 0`.
    pub fn bott(&self, d: &TorusDivisor) -> Result<BottReport> {
        let fan = self.fan();
        if !is_ample(fan, d)? {
            return Err(Error::RequiresAmpleTwist);
        }
        let mut sheaves = Vec::new();
        for i in 0..=fan.rank() {
            let dims: CohomologyVector = if i == 0 { self.line_bundle(d)? } else { self.hodge(i, d)? };
            let failures: Vec<Failure> = dims
                .dims
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, &h)| h > 0)
                .map(|(j, &h)| Failure { i, j, dim: h })
                .collect();
            sheaves.push(SheafReport {
                sheaf: format!("Omega^{i}(D)"),
                vanishing: failures.is_empty(),
                dims: dims.dims,
                failures,
            });
        }
        Ok(BottReport { pass: sheaves.iter().all(|s| s.vanishing), sheaves })
    }
}

pub fn bott_check(fan: &Fan, d: &TorusDivisor) -> Result<BottReport> {
    Cohomology::new(fan)?.bott(d)
}
