//! Smooth complete fans, torus-invariant divisors and their intersection theory.

mod build;
mod divisor;
mod intersect;
mod nef;
mod polytope;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{determinant, integer_inverse, LatticeVector};

pub use build::{product, projective_space};
pub use divisor::{format_class, NamedBasis, PicardLattice, TorusDivisor};
pub use nef::{curve_classes, nef_cone, nef_monoid_generators, picard_basis_divisors, picard_coords};
pub use polytope::{divisor_polytope, face_for_cone, ConeFace};

/// A fan given by primitive rays and maximal cones (index sets into `rays`).
pub struct Fan {
    rank: usize,
    rays: Vec<LatticeVector>,
    max_cones: Vec<Vec<usize>>,
    basis: Option<NamedBasis>,
    report: OnceLock<FanReport>,
    cache: OnceLock<Derived>,
    table: OnceLock<HashMap<Vec<usize>, BigInt>>,
}

/// Outcome of [`validate_fan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanReport {
    pub smooth: bool,
    pub complete: bool,
    pub violations: Vec<String>,
}

/// Torus-invariant curve of a ridge, stored as its degrees on every `D_rho`.
#[derive(Clone, Debug)]
pub struct Wall {
    pub ridge: Vec<usize>,
    pub cones: (usize, usize),
    pub degrees: Vec<BigInt>,
}

struct Derived {
    faces: HashSet<Vec<usize>>,
    by_dim: Vec<Vec<Vec<usize>>>,
    walls: Vec<Wall>,
    duals: Vec<Vec<LatticeVector>>,
    picard: PicardLattice,
}

impl Fan {
    /// Builds a fan after shape checks only; smoothness and completeness are
    /// reported by [`validate_fan`].
    pub fn new(rank: usize, rays: Vec<LatticeVector>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        if rays.is_empty() {
            return Err(Error::InvalidFan("no rays".into()));
        }
        for (k, r) in rays.iter().enumerate() {
            if r.rank() != rank {
                return Err(Error::InvalidFan(format!("ray {k} has length {} in rank {rank}", r.rank())));
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for c in max_cones {
            let set: BTreeSet<usize> = c.iter().copied().collect();
            if set.len() != c.len() {
                return Err(Error::InvalidFan(format!("repeated ray in cone {c:?}")));
            }
            if let Some(bad) = set.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!("cone {c:?} refers to missing ray {bad}")));
            }
            cones.push(set.into_iter().collect::<Vec<_>>());
        }
        cones.sort();
        Ok(Fan {
            rank,
            rays,
            max_cones: cones,
            basis: None,
            report: OnceLock::new(),
            cache: OnceLock::new(),
            table: OnceLock::new(),
        })
    }

    pub fn from_i64(rank: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Result<Fan> {
        Fan::new(
            rank,
            rays.iter().map(|r| LatticeVector::from_i64(r)).collect(),
            max_cones.iter().map(|c| c.to_vec()).collect(),
        )
    }

    /// Attach named divisor representatives (`H`, `E1`, ...). Their classes
    /// must form a basis of the Picard lattice.
    pub fn with_basis(mut self, names: Vec<String>, divisors: Vec<TorusDivisor>) -> Result<Fan> {
        let basis = NamedBasis::new(&self, names, divisors)?;
        self.basis = Some(basis);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn basis(&self) -> Option<&NamedBasis> {
        self.basis.as_ref()
    }

    pub fn report(&self) -> &FanReport {
        self.report.get_or_init(|| validate(self))
    }

    pub fn is_smooth_complete(&self) -> bool {
        let r = self.report();
        r.smooth && r.complete
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        if self.is_smooth_complete() {
            Ok(())
        } else {
            Err(Error::InvalidFan(self.report().violations.join("; ")))
        }
    }

    fn derived(&self) -> Result<&Derived> {
        self.require_valid()?;
        Ok(self.cache.get_or_init(|| derive(self)))
    }

    /// True when the (sorted) ray set spans a cone of the fan.
    pub fn is_cone(&self, rays: &[usize]) -> bool {
        match self.derived() {
            Ok(d) => d.faces.contains(rays),
            Err(_) => self.max_cones.iter().any(|c| rays.iter().all(|r| c.contains(r))),
        }
    }

    /// All cones with `s` rays, lexicographically ordered.
    pub fn cones_of_dim(&self, s: usize) -> Result<&[Vec<usize>]> {
        let d = self.derived()?;
        Ok(d.by_dim.get(s).map(|v| v.as_slice()).unwrap_or(&[]))
    }

    pub fn walls(&self) -> Result<&[Wall]> {
        Ok(&self.derived()?.walls)
    }

    pub fn picard(&self) -> Result<&PicardLattice> {
        Ok(&self.derived()?.picard)
    }

    /// Index of the first maximal cone containing the sorted ray set.
    pub fn first_max_cone_containing(&self, rays: &[usize]) -> Option<usize> {
        self.max_cones.iter().position(|c| rays.iter().all(|r| c.contains(r)))
    }

    /// Dual basis of a maximal cone: entry `k` pairs to 1 with the `k`-th
    /// ray of the cone and to 0 with the others.
    pub fn dual_basis(&self, cone: usize) -> Result<&[LatticeVector]> {
        Ok(&self.derived()?.duals[cone])
    }

    /// `(<m, v_rho>)_rho`.
    pub fn principal_divisor(&self, m: &LatticeVector) -> TorusDivisor {
        TorusDivisor::new(self.rays.iter().map(|v| v.dot(m)).collect())
    }

    pub(crate) fn check_len(&self, d: &TorusDivisor) -> Result<()> {
        if d.len() != self.rays.len() {
            return Err(Error::RankMismatch { expected: self.rays.len(), found: d.len() });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Fan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Fan").field("rank", &self.rank).field("rays", &self.rays).field("max_cones", &self.max_cones).finish()
    }
}

/// Smoothness and completeness report, listing every violation.
pub fn validate_fan(fan: &Fan) -> FanReport {
    fan.report().clone()
}

/// `-K = sum of all D_rho`.
pub fn canonical_divisor(fan: &Fan) -> TorusDivisor {
    TorusDivisor::new(vec![BigInt::one(); fan.num_rays()])
}

pub fn is_nef(fan: &Fan, d: &TorusDivisor) -> Result<bool> {
    fan.check_len(d)?;
    Ok(fan.walls()?.iter().all(|w| !d.dot(&w.degrees).is_negative()))
}

pub fn is_ample(fan: &Fan, d: &TorusDivisor) -> Result<bool> {
    fan.check_len(d)?;
    Ok(fan.walls()?.iter().all(|w| d.dot(&w.degrees).is_positive()))
}

pub use intersect::{intersect_divisors, intersection_number};

fn validate(fan: &Fan) -> FanReport {
    let n = fan.rank;
    let mut violations = Vec::new();
    let mut smooth = true;
    let mut complete = true;

    for (k, r) in fan.rays.iter().enumerate() {
        if !r.is_primitive() {
            smooth = false;
            violations.push(format!("ray {k} {r} is not primitive"));
        }
    }
    if fan.max_cones.is_empty() {
        complete = false;
        violations.push("no maximal cones".into());
    }
    for w in fan.max_cones.windows(2) {
        if w[0] == w[1] {
            violations.push(format!("maximal cone {:?} listed twice", w[0]));
            complete = false;
        }
    }
    for c in &fan.max_cones {
        if c.len() != n {
            smooth = false;
            complete = false;
            violations.push(format!("cone {c:?} has {} rays, expected {n}", c.len()));
            continue;
        }
        let m: Vec<Vec<BigInt>> = c.iter().map(|&i| fan.rays[i].coords().to_vec()).collect();
        let det = determinant(&m);
        if det.is_zero() {
            smooth = false;
            complete = false;
            violations.push(format!("cone {c:?} is not full-dimensional"));
        } else if !det.abs().is_one() {
            smooth = false;
            violations.push(format!("cone {c:?} has determinant {det}"));
        }
    }
    if !complete || fan.max_cones.is_empty() {
        return FanReport { smooth, complete, violations };
    }

    let mut ridges: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (ci, c) in fan.max_cones.iter().enumerate() {
        for skip in 0..n {
            let ridge: Vec<usize> = c.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, &r)| r).collect();
            ridges.entry(ridge).or_default().push(ci);
        }
    }
    let mut keys: Vec<&Vec<usize>> = ridges.keys().collect();
    keys.sort();
    for ridge in keys {
        let owners = &ridges[ridge];
        if owners.len() != 2 {
            complete = false;
            violations.push(format!("ridge {ridge:?} lies in {} maximal cones", owners.len()));
            continue;
        }
        // the two cones must lie on opposite sides of the ridge
        let (a, b) = (&fan.max_cones[owners[0]], &fan.max_cones[owners[1]]);
        let ra = *a.iter().find(|r| !ridge.contains(r)).unwrap();
        let rb = *b.iter().find(|r| !ridge.contains(r)).unwrap();
        let mut span: Vec<Vec<BigInt>> = ridge.iter().map(|&i| fan.rays[i].coords().to_vec()).collect();
        span.push(fan.rays[ra].coords().to_vec());
        let da = determinant(&span);
        span.pop();
        span.push(fan.rays[rb].coords().to_vec());
        let db = determinant(&span);
        if (da.is_positive() && db.is_positive()) || (da.is_negative() && db.is_negative()) {
            complete = false;
            violations.push(format!("cones {a:?} and {b:?} overlap across ridge {ridge:?}"));
        }
    }
    FanReport { smooth, complete, violations }
}

fn derive(fan: &Fan) -> Derived {
    let n = fan.rank;
    let mut faces: HashSet<Vec<usize>> = HashSet::new();
    for c in &fan.max_cones {
        for mask in 0u32..(1 << c.len()) {
            let f: Vec<usize> = c.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &r)| r).collect();
            faces.insert(f);
        }
    }
    let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for f in &faces {
        by_dim[f.len()].push(f.clone());
    }
    for v in by_dim.iter_mut() {
        v.sort();
    }

    let duals: Vec<Vec<LatticeVector>> = fan
        .max_cones
        .iter()
        .map(|c| {
            let m: Vec<Vec<BigInt>> = c.iter().map(|&i| fan.rays[i].coords().to_vec()).collect();
            let inv = integer_inverse(&m).expect("unimodular cone");
            (0..n).map(|k| LatticeVector::new((0..n).map(|row| inv[row][k].clone()).collect())).collect()
        })
        .collect();

    let mut walls = Vec::new();
    for ridge in &by_dim[n - 1] {
        let owners: Vec<usize> =
            (0..fan.max_cones.len()).filter(|&ci| ridge.iter().all(|r| fan.max_cones[ci].contains(r))).collect();
        let (a, b) = (owners[0], owners[1]);
        let ca = &fan.max_cones[a];
        let ra = *ca.iter().find(|r| !ridge.contains(r)).unwrap();
        let rb = *fan.max_cones[b].iter().find(|r| !ridge.contains(r)).unwrap();
        let sum = &fan.rays[ra] + &fan.rays[rb];
        let mut degrees = vec![BigInt::zero(); fan.rays.len()];
        degrees[ra] = BigInt::one();
        degrees[rb] = BigInt::one();
        for (k, &i) in ca.iter().enumerate() {
            if i != ra {
                degrees[i] = -duals[a][k].dot(&sum);
            }
        }
        walls.push(Wall { ridge: ridge.clone(), cones: (a, b), degrees });
    }

    let base = fan.max_cones[0].clone();
    let basis_rays: Vec<usize> = (0..fan.rays.len()).filter(|r| !base.contains(r)).collect();
    let picard = PicardLattice { base_cone: 0, base_rays: base, basis_rays, base_dual: duals[0].clone() };
    Derived { faces, by_dim, walls, duals, picard }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn p2() -> Fan {
        Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[0, 2]]).unwrap()
    }

    pub fn p1() -> Fan {
        Fan::from_i64(1, &[&[1], &[-1]], &[&[0], &[1]]).unwrap()
    }

    pub fn p3() -> Fan {
        Fan::from_i64(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]],
            &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
        )
        .unwrap()
    }

    /// Blow-up of P^3 at the torus-fixed point of cone {e1,e2,e3}.
    pub fn bl_pt_p3() -> Fan {
        Fan::from_i64(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1], &[1, 1, 1]],
            &[&[0, 1, 3], &[0, 2, 3], &[1, 2, 3], &[0, 1, 4], &[0, 2, 4], &[1, 2, 4]],
        )
        .unwrap()
    }

    pub fn p1xp2() -> Fan {
        Fan::from_i64(
            3,
            &[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, -1, -1]],
            &[&[0, 2, 3], &[0, 2, 4], &[0, 3, 4], &[1, 2, 3], &[1, 2, 4], &[1, 3, 4]],
        )
        .unwrap()
    }

    pub fn div(c: &[i64]) -> TorusDivisor {
        TorusDivisor::from_i64(c)
    }

    #[test]
    fn p2_is_smooth_complete() {
        let r = validate_fan(&p2());
        assert!(r.smooth && r.complete, "{r:?}");
    }

    #[test]
    fn missing_cone_is_incomplete() {
        let f = Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2]]).unwrap();
        let r = validate_fan(&f);
        assert!(!r.complete);
        assert!(r.smooth);
    }

    #[test]
    fn determinant_two_is_singular() {
        let f = Fan::from_i64(2, &[&[1, 0], &[1, 2]], &[&[0, 1]]).unwrap();
        let r = validate_fan(&f);
        assert!(!r.smooth);
        assert!(r.violations.iter().any(|v| v.contains("determinant 2")));
    }

    #[test]
    fn non_primitive_ray_is_listed() {
        let f = Fan::from_i64(1, &[&[2], &[-1]], &[&[0], &[1]]).unwrap();
        let r = validate_fan(&f);
        assert!(!r.smooth);
        assert!(r.violations[0].contains("not primitive"));
    }

    #[test]
    fn overlapping_cones_detected() {
        // both cones on the same side of the ray e2
        let f = Fan::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1], &[1, 2]]).unwrap();
        assert!(!validate_fan(&f).complete);
    }

    #[test]
    fn nef_and_ample_on_p1xp2() {
        let f = p1xp2();
        // A = D_0, B = D_2
        let a_plus_b = div(&[1, 0, 1, 0, 0]);
        assert!(is_ample(&f, &a_plus_b).unwrap());
        let b = div(&[0, 0, 1, 0, 0]);
        assert!(is_nef(&f, &b).unwrap());
        assert!(!is_ample(&f, &b).unwrap());
        assert!(is_nef(&f, &div(&[1, 0])).is_err());
    }

    #[test]
    fn nef_and_ample_on_bl_pt_p3() {
        let f = bl_pt_p3();
        // H = D_3, E = D_4
        let h_minus_e = div(&[0, 0, 0, 1, -1]);
        assert!(is_nef(&f, &h_minus_e).unwrap());
        assert!(!is_ample(&f, &h_minus_e).unwrap());
        assert!(is_ample(&f, &div(&[0, 0, 0, 2, -1])).unwrap());
    }

    #[test]
    fn wall_degrees_on_p2() {
        let f = p2();
        for w in f.walls().unwrap() {
            assert_eq!(w.degrees, vec![BigInt::one(); 3]);
        }
    }
}
