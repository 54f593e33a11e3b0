use serde::Serialize;

use super::{is_nef, Fan, TorusDivisor};
use crate::error::{Error, Result};
use crate::lattice::{Inequality, LatticePolytope, LatticeVector};

/// A cone of the fan with a basis of `M(tau) = M ∩ tau^perp`.
#[derive(Clone, Debug, Serialize)]
pub struct ConeFace {
    pub rays: Vec<usize>,
    pub m_basis: Vec<LatticeVector>,
}

impl ConeFace {
    pub fn dim(&self) -> usize {
        self.rays.len()
    }
}

impl Fan {
    /// Face data for a cone given by sorted ray indices.
    pub fn cone_face(&self, rays: &[usize]) -> Result<ConeFace> {
        let mut rays = rays.to_vec();
        rays.sort_unstable();
        rays.dedup();
        if !self.is_cone(&rays) {
            return Err(Error::NotACone(rays));
        }
        let ci = self.first_max_cone_containing(&rays).expect("cone");
        let dual = self.dual_basis(ci)?;
        // dual vectors of the remaining rays of a unimodular cone span M(tau)
        let m_basis = self.max_cones()[ci]
            .iter()
            .zip(dual)
            .filter(|(r, _)| !rays.contains(r))
            .map(|(_, u)| u.clone())
            .collect();
        Ok(ConeFace { rays, m_basis })
    }
}

/// `P_D = {m : <m, v_rho> >= -a_rho}`.
pub fn divisor_polytope(fan: &Fan, d: &TorusDivisor) -> Result<LatticePolytope> {
    fan.check_len(d)?;
    let ineqs = fan.rays().iter().zip(d.coeffs()).map(|(v, a)| Inequality::new(v.clone(), -a)).collect();
    LatticePolytope::new(fan.rank(), ineqs)
}

/// `F_tau = {m in P_D : <m, v_rho> = -a_rho for rho in tau}`.
pub fn face_for_cone(fan: &Fan, d: &TorusDivisor, tau: &ConeFace) -> Result<LatticePolytope> {
    if !is_nef(fan, d)? {
        return Err(Error::FaceRequiresNef);
    }
    if !fan.is_cone(&tau.rays) {
        return Err(Error::NotACone(tau.rays.clone()));
    }
    let mut ineqs: Vec<Inequality> =
        fan.rays().iter().zip(d.coeffs()).map(|(v, a)| Inequality::new(v.clone(), -a)).collect();
    for &r in &tau.rays {
        ineqs.push(Inequality::new(-&fan.rays()[r], d.coeff(r).clone()));
    }
    LatticePolytope::new(fan.rank(), ineqs)
}

#[cfg(test)]
mod tests {
    use super::super::tests::*;
    use super::*;
    use crate::lattice::lattice_points;
    use num_traits::Zero;

    #[test]
    fn sections_of_p1_degree_two() {
        let f = p1();
        let d = div(&[0, 2]);
        assert_eq!(lattice_points(&divisor_polytope(&f, &d).unwrap()).unwrap().len(), 3);
        let tau = f.cone_face(&[0]).unwrap();
        assert_eq!(lattice_points(&face_for_cone(&f, &d, &tau).unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn p2_polytopes() {
        let f = p2();
        assert!(lattice_points(&divisor_polytope(&f, &div(&[0, 0, -1])).unwrap()).unwrap().is_empty());
        let h = div(&[0, 0, 1]);
        let whole = f.cone_face(&[]).unwrap();
        assert_eq!(whole.m_basis.len(), 2);
        assert_eq!(lattice_points(&face_for_cone(&f, &h, &whole).unwrap()).unwrap().len(), 3);
        let edge = f.cone_face(&[0]).unwrap();
        assert_eq!(edge.m_basis.len(), 1);
        assert_eq!(lattice_points(&face_for_cone(&f, &h, &edge).unwrap()).unwrap().len(), 2);
        assert!(matches!(face_for_cone(&f, &div(&[0, 0, -1]), &edge), Err(Error::FaceRequiresNef)));
    }

    #[test]
    fn p1xp2_sections() {
        let f = p1xp2();
        let d = div(&[1, 0, 1, 0, 0]);
        assert_eq!(lattice_points(&divisor_polytope(&f, &d).unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn m_tau_is_orthogonal() {
        let f = bl_pt_p3();
        for s in 0..=3 {
            for c in f.cones_of_dim(s).unwrap() {
                let face = f.cone_face(c).unwrap();
                assert_eq!(face.m_basis.len(), 3 - s);
                for u in &face.m_basis {
                    for &r in c {
                        assert!(u.dot(&f.rays()[r]).is_zero());
                    }
                }
            }
        }
    }
}
