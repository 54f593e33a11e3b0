//! Sheaf cohomology of line bundles and twisted differentials on smooth
//! complete toric varieties.

mod bott;
mod ishida;
mod simplicial;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::{is_nef, Fan, TorusDivisor};
use crate::lattice::{dual_cone, lattice_points, Cone, Inequality, LatticePolytope};

pub use bott::{bott_check, BottReport, Failure, SheafReport};
pub use simplicial::reduced_cohomology;

/// `h^0 .. h^n` of a coherent sheaf.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyVector {
    pub dims: Vec<u64>,
}

impl CohomologyVector {
    pub fn zeros(n: usize) -> Self {
        CohomologyVector { dims: vec![0; n + 1] }
    }

    pub fn euler(&self) -> i64 {
        self.dims.iter().enumerate().map(|(j, &d)| if j % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    /// True when `h^j = 0` for all `j > i`.
    pub fn vanishes_above(&self, i: usize) -> bool {
        self.dims.iter().skip(i + 1).all(|&d| d == 0)
    }
}

/// One sign pattern `S` with nonzero reduced cohomology of `K_S`.
#[derive(Clone, Debug)]
struct Chamber {
    negative: Vec<usize>,
    // (j, dim H~^{j-1}(K_S)) with nonzero dims
    contributions: Vec<(usize, u64)>,
    bounded: bool,
}

/// Per-fan caches for repeated cohomology queries.
pub struct Cohomology<'a> {
    fan: &'a Fan,
    chambers: OnceLock<Result<Vec<Chamber>, String>>,
    ishida: Mutex<HashMap<(usize, u64), Vec<u64>>>,
}

impl<'a> Cohomology<'a> {
    pub fn new(fan: &'a Fan) -> Result<Self> {
        fan.require_valid()?;
        if fan.num_rays() > 63 {
            return Err(Error::InvalidFan("too many rays".into()));
        }
        Ok(Cohomology { fan, chambers: OnceLock::new(), ishida: Mutex::new(HashMap::new()) })
    }

    pub fn fan(&self) -> &Fan {
        self.fan
    }

    fn chambers(&self) -> Result<&[Chamber]> {
        match self.chambers.get_or_init(|| build_chambers(self.fan).map_err(|e| e.to_string())) {
            Ok(c) => Ok(c),
            Err(e) => Err(Error::InvalidFan(e.clone())),
        }
    }

    /// `h^j(O(D))` by the chamber decomposition of `M`.
    pub fn line_bundle(&self, d: &TorusDivisor) -> Result<CohomologyVector> {
        let fan = self.fan;
        fan.check_len(d)?;
        let n = fan.rank();
        let counts: Vec<Result<(usize, Vec<(usize, u64)>)>> = self
            .chambers()?
            .par_iter()
            .map(|ch| {
                let region = chamber_region(fan, d, &ch.negative)?;
                if !ch.bounded {
                    if is_infeasible(&region) {
                        return Ok((0, vec![]));
                    }
                    return Err(Error::DivergentWeight(ch.negative.clone()));
                }
                let c = lattice_points(&region)?.len();
                Ok((c, ch.contributions.clone()))
            })
            .collect();
        let mut out = CohomologyVector::zeros(n);
        for r in counts {
            let (c, contrib) = r?;
            for (j, dim) in contrib {
                out.dims[j] += c as u64 * dim;
            }
        }
        Ok(out)
    }

    /// `h^j(Omega^i (D))` for nef `D` from the log resolution with trivial
    /// log bundles.
    pub fn hodge(&self, i: usize, d: &TorusDivisor) -> Result<CohomologyVector> {
        let fan = self.fan;
        let n = fan.rank();
        if !is_nef(fan, d)? {
            return Err(Error::RequiresNefTwist);
        }
        if i > n {
            return Err(Error::RankMismatch { expected: n, found: i });
        }
        let poly = crate::fan::divisor_polytope(fan, d)?;
        let mut by_tight: HashMap<u64, u64> = HashMap::new();
        for m in lattice_points(&poly)? {
            let mut mask = 0u64;
            for (r, (v, a)) in fan.rays().iter().zip(d.coeffs()).enumerate() {
                if v.dot(&m) == -a {
                    mask |= 1 << r;
                }
            }
            *by_tight.entry(mask).or_default() += 1;
        }
        let mut keys: Vec<u64> = by_tight.keys().copied().collect();
        keys.sort_unstable();
        let per: Vec<Result<Vec<u64>>> = keys.par_iter().map(|&t| self.ishida_weight(i, t)).collect();
        let mut out = CohomologyVector::zeros(n);
        for (t, h) in keys.iter().zip(per) {
            let h = h?;
            for (j, v) in h.iter().enumerate() {
                out.dims[j] += by_tight[t] * v;
            }
        }
        Ok(out)
    }

    fn ishida_weight(&self, i: usize, tight: u64) -> Result<Vec<u64>> {
        if let Some(v) = self.ishida.lock().unwrap().get(&(i, tight)) {
            return Ok(v.clone());
        }
        let v = ishida::weight_cohomology(self.fan, i, tight)?;
        self.ishida.lock().unwrap().insert((i, tight), v.clone());
        Ok(v)
    }
}

// no rational point: the homogenized cone has nothing with t > 0
fn is_infeasible(p: &LatticePolytope) -> bool {
    let n = p.rank();
    let mut gens = Vec::new();
    for q in p.inequalities() {
        let mut c = q.normal.coords().to_vec();
        c.push(-&q.offset);
        gens.push(crate::lattice::LatticeVector::new(c));
    }
    gens.push(crate::lattice::LatticeVector::unit(n + 1, n));
    let cone = Cone::new(n + 1, gens).expect("ranks agree");
    // generators of the homogenized region itself, not of its dual
    let region = dual_cone(&cone).expect("nonzero rank");
    region.generators().iter().all(|g| g.coords()[n] == BigInt::from(0))
}

fn chamber_region(fan: &Fan, d: &TorusDivisor, negative: &[usize]) -> Result<LatticePolytope> {
    let ineqs = fan
        .rays()
        .iter()
        .zip(d.coeffs())
        .enumerate()
        .map(|(r, (v, a))| {
            if negative.contains(&r) {
                Inequality::new(-v, a + 1)
            } else {
                Inequality::new(v.clone(), -a)
            }
        })
        .collect();
    LatticePolytope::new(fan.rank(), ineqs)
}

fn build_chambers(fan: &Fan) -> Result<Vec<Chamber>> {
    let n = fan.rank();
    let nr = fan.num_rays();
    let mut cones: Vec<Vec<usize>> = Vec::new();
    for s in 1..=n {
        cones.extend(fan.cones_of_dim(s)?.iter().cloned());
    }
    let masks: Vec<u64> = (0..1u64 << nr).collect();
    let found: Vec<Result<Option<Chamber>>> = masks
        .par_iter()
        .map(|&mask| {
            let faces: Vec<Vec<usize>> =
                cones.iter().filter(|c| c.iter().all(|&r| mask >> r & 1 == 1)).cloned().collect();
            let h = reduced_cohomology(&faces, n - 1);
            let contributions: Vec<(usize, u64)> =
                h.iter().enumerate().filter(|(_, &d)| d > 0).map(|(k, &d)| (k, d as u64)).collect();
            if contributions.is_empty() {
                return Ok(None);
            }
            let negative: Vec<usize> = (0..nr).filter(|&r| mask >> r & 1 == 1).collect();
            let signed = fan
                .rays()
                .iter()
                .enumerate()
                .map(|(r, v)| if mask >> r & 1 == 1 { -v } else { v.clone() })
                .collect();
            let bounded = dual_cone(&Cone::new(n, signed)?)?.generators().is_empty();
            Ok(Some(Chamber { negative, contributions, bounded }))
        })
        .collect();
    let mut out = Vec::new();
    for c in found {
        if let Some(c) = c? {
            out.push(c);
        }
    }
    Ok(out)
}

pub fn line_bundle_cohomology(fan: &Fan, d: &TorusDivisor) -> Result<CohomologyVector> {
    Cohomology::new(fan)?.line_bundle(d)
}

pub fn hodge_twisted_cohomology(fan: &Fan, i: usize, d: &TorusDivisor) -> Result<CohomologyVector> {
    Cohomology::new(fan)?.hodge(i, d)
}

/// `h^j(Omega^i (D)) = 0` for all `j > i`.
pub fn nef_vanishing_check(fan: &Fan, i: usize, d: &TorusDivisor) -> Result<bool> {
    Ok(hodge_twisted_cohomology(fan, i, d)?.vanishes_above(i))
}
