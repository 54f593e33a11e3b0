use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::cone::extreme_rays;
use super::polytope::{lattice_points, Inequality, LatticePolytope};
use super::{canonical, Cone, LatticeVector};
use crate::error::{Error, Result};

/// Minimal generating set of the lattice points of a pointed cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidBasis {
    pub elements: Vec<LatticeVector>,
}

/// Hilbert basis by enumeration below a degree bound.
///
/// With `w` strictly positive on the cone, every irreducible element lies in
/// the zonotope spanned by the extreme rays, hence has degree at most the sum
/// of the `dim` largest ray degrees. Candidates are sorted by degree and kept
/// when no smaller irreducible can be subtracted inside the cone.
pub fn hilbert_basis(cone: &Cone) -> Result<MonoidBasis> {
    if !cone.is_pointed() {
        return Err(Error::NotPointed);
    }
    let rank = cone.rank();
    let facets = cone.facet_normals();
    let (_, rays) = extreme_rays(rank, facets);
    if rays.is_empty() {
        return Ok(MonoidBasis { elements: vec![] });
    }
    let w = facets.iter().fold(LatticeVector::zero(rank), |acc, f| &acc + f);
    let dim = cone.dim();
    let mut degs: Vec<BigInt> = rays.iter().map(|r| r.dot(&w)).collect();
    degs.sort_by(|a, b| b.cmp(a));
    let bound: BigInt = degs.iter().take(dim).sum();

    let mut ineqs: Vec<Inequality> = facets.iter().map(|f| Inequality::new(f.clone(), BigInt::zero())).collect();
    ineqs.push(Inequality::new(-&w, -bound));
    let box_ = LatticePolytope::new(rank, ineqs)?;
    let mut cands: Vec<(BigInt, LatticeVector)> = lattice_points(&box_)?
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| (p.dot(&w), p))
        .collect();
    cands.sort();

    let mut basis: Vec<(BigInt, LatticeVector)> = Vec::new();
    for (d, x) in cands {
        let reducible = basis.iter().any(|(dy, y)| dy < &d && cone.contains(&(&x - y)));
        if !reducible {
            basis.push((d, x));
        }
    }
    Ok(MonoidBasis { elements: canonical(basis.into_iter().map(|(_, x)| x).collect()) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hb(rank: usize, gens: &[&[i64]]) -> Vec<Vec<i64>> {
        let c = Cone::from_i64(rank, gens).unwrap();
        hilbert_basis(&c).unwrap().elements.iter().map(|v| v.to_i64().unwrap()).collect()
    }

    #[test]
    fn orthant() {
        assert_eq!(hb(2, &[&[1, 0], &[0, 1]]), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn two_dim_example() {
        assert_eq!(hb(2, &[&[1, 0], &[1, 2]]), vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn nonsimplicial_square_cone() {
        let out = hb(3, &[&[1, -1, -1], &[1, -1, 0], &[1, 0, -1], &[1, 0, 0]]);
        assert_eq!(out.len(), 4);
    }

    #[test]
    fn lower_dimensional_cone() {
        assert_eq!(hb(3, &[&[1, 0, 0], &[1, 3, 0]]), vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 2, 0], vec![1, 3, 0]]);
    }

    #[test]
    fn non_pointed_rejected() {
        let c = Cone::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert!(matches!(hilbert_basis(&c), Err(Error::NotPointed)));
    }
}
