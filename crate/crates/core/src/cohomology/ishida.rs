//! One weight of the log resolution of `Omega^i (D)` for nef `D`.
//!
//! For a weight `m` whose tight set (rays with `<m, v_rho> = -a_rho`) is `T`,
//! the complex is `C^s = ⊕_{tau ⊆ T, |tau| = s} Λ^{i-s} M(tau)` with the
//! differential `τ -> τ ∪ {ρ}` given by contraction with `v_ρ`. Each summand
//! is embedded in `Λ^{i-s} Q^n` through Plücker coordinates; since
//! contractions anticommute no extra incidence sign is needed for `d∘d = 0`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::Result;
use crate::fan::Fan;
use crate::lattice::{determinant, rational_rank_i64, LatticeVector};

pub(super) fn weight_cohomology(fan: &Fan, i: usize, tight: u64) -> Result<Vec<u64>> {
    let cx = WeightComplex::build(fan, i, tight)?;
    let n = fan.rank();
    let ranks: Vec<usize> = (0..=i).map(|s| cx.differential_rank(fan, s)).collect();
    let mut out = vec![0u64; n + 1];
    for s in 0..=i {
        let prev = if s == 0 { 0 } else { ranks[s - 1] };
        out[s] = (cx.dims[s] - ranks[s] - prev) as u64;
    }
    Ok(out)
}

pub(super) struct WeightComplex {
    // cones[s] = cones with s rays inside the tight set
    pub cones: Vec<Vec<Vec<usize>>>,
    // embedding[s][k] = Plücker coordinates of the k-th basis element of C^s,
    // as (cone index, coordinates in Λ^{i-s} Q^n)
    pub basis: Vec<Vec<(usize, Vec<i64>)>>,
    pub dims: Vec<usize>,
    n: usize,
    i: usize,
}

impl WeightComplex {
    pub fn build(fan: &Fan, i: usize, tight: u64) -> Result<Self> {
        let n = fan.rank();
        let mut cones = Vec::with_capacity(i + 1);
        let mut basis = Vec::with_capacity(i + 1);
        for s in 0..=i {
            let list: Vec<Vec<usize>> = if s > n {
                Vec::new()
            } else {
                fan.cones_of_dim(s)?.iter().filter(|c| c.iter().all(|&r| tight >> r & 1 == 1)).cloned().collect()
            };
            let mut b = Vec::new();
            for (ci, c) in list.iter().enumerate() {
                let face = fan.cone_face(c)?;
                for sub in subsets(face.m_basis.len(), i - s) {
                    let vs: Vec<&LatticeVector> = sub.iter().map(|&k| &face.m_basis[k]).collect();
                    b.push((ci, plucker(&vs, n)));
                }
            }
            cones.push(list);
            basis.push(b);
        }
        let dims = basis.iter().map(|b| b.len()).collect();
        Ok(WeightComplex { cones, basis, dims, n, i })
    }

    /// Rank of `d: C^s -> C^{s+1}`.
    pub fn differential_rank(&self, fan: &Fan, s: usize) -> usize {
        if s >= self.i || self.dims[s] == 0 || self.cones[s + 1].is_empty() {
            return 0;
        }
        let rows = self.differential(fan, s);
        rational_rank_i64(&rows)
    }

    /// The map `C^s -> ⊕_{τ'} Λ^{i-s-1} Q^n`, one row per basis element of `C^s`.
    pub fn differential(&self, fan: &Fan, s: usize) -> Vec<Vec<i64>> {
        let k = self.i - s;
        let src = subsets(self.n, k);
        let dst = subsets(self.n, k - 1);
        let width = dst.len();
        let targets = &self.cones[s + 1];
        self.basis[s]
            .iter()
            .map(|(ci, coords)| {
                let tau = &self.cones[s][*ci];
                let mut row = vec![0i64; width * targets.len()];
                for (ti, t) in targets.iter().enumerate() {
                    let Some(&rho) = t.iter().find(|r| !tau.contains(r)) else { continue };
                    if !tau.iter().all(|r| t.contains(r)) {
                        continue;
                    }
                    let v: Vec<i64> = fan.rays()[rho].coords().iter().map(|a| a.to_i64().unwrap()).collect();
                    for (si, set) in src.iter().enumerate() {
                        let c = coords[si];
                        if c == 0 {
                            continue;
                        }
                        for (l, &idx) in set.iter().enumerate() {
                            if v[idx] == 0 {
                                continue;
                            }
                            let rest: Vec<usize> = set.iter().copied().filter(|&x| x != idx).collect();
                            let di = dst.binary_search(&rest).unwrap();
                            let sign = if l % 2 == 0 { 1 } else { -1 };
                            row[ti * width + di] += sign * c * v[idx];
                        }
                    }
                }
                row
            })
            .collect()
    }
}

/// Sorted `k`-subsets of `0..n` in lexicographic order.
pub(super) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Coordinates of `v_1 ∧ ... ∧ v_k` in the basis `e_I`, `I` sorted.
fn plucker(vs: &[&LatticeVector], n: usize) -> Vec<i64> {
    subsets(n, vs.len())
        .iter()
        .map(|set| {
            let m: Vec<Vec<BigInt>> = vs.iter().map(|v| set.iter().map(|&c| v.coords()[c].clone()).collect()).collect();
            determinant(&m).to_i64().expect("small minor")
        })
        .collect()
}
