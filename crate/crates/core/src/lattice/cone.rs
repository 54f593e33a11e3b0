use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::rational_rank;
use super::{canonical, rows_of, LatticeVector};
use crate::error::{Error, Result};

/// Rational polyhedral cone given by generators.
///
/// The facet description is computed on first use and cached.
pub struct Cone {
    rank: usize,
    generators: Vec<LatticeVector>,
    facets: OnceLock<Vec<LatticeVector>>,
}

impl Cone {
    pub fn new(rank: usize, generators: Vec<LatticeVector>) -> Result<Self> {
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: g.rank() });
            }
        }
        Ok(Cone { rank, generators, facets: OnceLock::new() })
    }

    pub fn from_i64(rank: usize, gens: &[&[i64]]) -> Result<Self> {
        Cone::new(rank, gens.iter().map(|g| LatticeVector::from_i64(g)).collect())
    }

    pub fn orthant(rank: usize) -> Self {
        Cone::new(rank, (0..rank).map(|k| LatticeVector::unit(rank, k)).collect()).expect("ranks agree")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// Inequalities cutting out the cone: x is in the cone iff it pairs
    /// nonnegatively with each of these. Equalities appear as +/- pairs.
    pub fn facet_normals(&self) -> &[LatticeVector] {
        self.facets.get_or_init(|| {
            let (lin, rays) = extreme_rays(self.rank, &self.generators);
            with_lineality(lin, rays)
        })
    }

    pub fn contains(&self, x: &LatticeVector) -> bool {
        self.facet_normals().iter().all(|f| !f.dot(x).is_negative())
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        rational_rank(&rows_of(&self.generators))
    }

    /// True when the cone contains no line.
    pub fn is_pointed(&self) -> bool {
        // the lineality space is the annihilator of the dual cone
        rational_rank(&rows_of(self.facet_normals())) == self.rank
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.rank
    }

    /// Primitive, irredundant generators in lexicographic order.
    pub fn normalized(&self) -> Cone {
        let (lin, rays) = extreme_rays(self.rank, self.facet_normals());
        Cone::new(self.rank, with_lineality(lin, rays)).expect("ranks agree")
    }
}

impl Clone for Cone {
    fn clone(&self) -> Self {
        Cone { rank: self.rank, generators: self.generators.clone(), facets: self.facets.clone() }
    }
}

impl std::fmt::Debug for Cone {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Cone").field("rank", &self.rank).field("generators", &self.generators).finish()
    }
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.generators == other.generators
    }
}

#[derive(Serialize, Deserialize)]
struct ConeJson {
    rank: usize,
    generators: Vec<LatticeVector>,
}

impl Serialize for Cone {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConeJson { rank: self.rank, generators: self.generators.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cone {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ConeJson::deserialize(d)?;
        Cone::new(j.rank, j.generators).map_err(serde::de::Error::custom)
    }
}

/// `{x : <x, g> >= 0 for all generators g}`.
pub fn dual_cone(cone: &Cone) -> Result<Cone> {
    if cone.rank == 0 {
        return Err(Error::EmptyAmbient);
    }
    Cone::new(cone.rank, cone.facet_normals().to_vec())
}

fn with_lineality(lin: Vec<LatticeVector>, mut rays: Vec<LatticeVector>) -> Vec<LatticeVector> {
    for l in lin {
        rays.push(-&l);
        rays.push(l);
    }
    canonical(rays)
}

/// Double description of `{x : <a, x> >= 0 for a in constraints}`.
///
/// Returns a basis of the lineality space and the primitive extreme rays
/// modulo it.
pub(crate) fn extreme_rays(rank: usize, constraints: &[LatticeVector]) -> (Vec<LatticeVector>, Vec<LatticeVector>) {
    let mut lin: Vec<LatticeVector> = (0..rank).map(|k| LatticeVector::unit(rank, k)).collect();
    let mut rays: Vec<LatticeVector> = Vec::new();
    let mut seen: Vec<&LatticeVector> = Vec::new();

    for a in constraints {
        if a.is_zero() {
            continue;
        }
        if let Some(pos) = lin.iter().position(|l| !a.dot(l).is_zero()) {
            // the constraint cuts the lineality space: one direction of it
            // becomes a ray, the rest is projected into the hyperplane
            let mut l0 = lin.swap_remove(pos);
            let mut c0 = a.dot(&l0);
            if c0.is_negative() {
                l0 = -&l0;
                c0 = -c0;
            }
            let project = |v: &LatticeVector| (&v.scale(&c0) - &l0.scale(&a.dot(v))).primitive();
            lin = lin.iter().map(project).collect();
            rays = rays.iter().map(project).collect();
            rays.push(l0);
            rays = canonical(rays);
            seen.push(a);
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| a.dot(r)).collect();
        let mut next: Vec<LatticeVector> = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (k, v) in vals.iter().enumerate() {
            if v.is_negative() {
                neg.push(k);
            } else {
                next.push(rays[k].clone());
                if v.is_positive() {
                    pos.push(k);
                }
            }
        }
        if !neg.is_empty() && !pos.is_empty() {
            let target = rank - lin.len();
            let tight: Vec<Vec<bool>> =
                rays.iter().map(|r| seen.iter().map(|s| s.dot(r).is_zero()).collect()).collect();
            for &p in &pos {
                for &n in &neg {
                    if !adjacent(&tight[p], &tight[n], &seen, target) {
                        continue;
                    }
                    let ray = &rays[n].scale(&vals[p]) - &rays[p].scale(&vals[n]);
                    next.push(ray.primitive());
                }
            }
        }
        rays = canonical(next);
        seen.push(a);
    }
    (canonical(lin), rays)
}

fn adjacent(tp: &[bool], tn: &[bool], seen: &[&LatticeVector], dim: usize) -> bool {
    if dim < 2 {
        return true;
    }
    let common: Vec<Vec<BigInt>> = seen
        .iter()
        .zip(tp.iter().zip(tn))
        .filter(|(_, (a, b))| **a && **b)
        .map(|(s, _)| s.coords().to_vec())
        .collect();
    common.len() >= dim - 2 && rational_rank(&common) == dim - 2
}
