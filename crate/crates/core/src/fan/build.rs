use num_bigint::BigInt;

use super::{Fan, TorusDivisor};
use crate::error::Result;
use crate::lattice::LatticeVector;

/// `P^n` with rays `e_1 .. e_n, -(e_1 + ... + e_n)` and basis `H = D_0`.
pub fn projective_space(n: usize) -> Result<Fan> {
    let mut rays: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    rays.push(LatticeVector::new(vec![BigInt::from(-1); n]));
    let cones = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
    let fan = Fan::new(n, rays, cones)?;
    let h = TorusDivisor::prime(n + 1, 0);
    fan.with_basis(vec!["H".into()], vec![h])
}

/// Product fan; rays of `a` come first. No named basis is attached.
pub fn product(a: &Fan, b: &Fan) -> Result<Fan> {
    let (ra, rb) = (a.rank(), b.rank());
    let mut rays = Vec::with_capacity(a.num_rays() + b.num_rays());
    for v in a.rays() {
        let mut c = v.coords().to_vec();
        c.extend(std::iter::repeat_n(BigInt::from(0), rb));
        rays.push(LatticeVector::new(c));
    }
    for v in b.rays() {
        let mut c = vec![BigInt::from(0); ra];
        c.extend(v.coords().iter().cloned());
        rays.push(LatticeVector::new(c));
    }
    let na = a.num_rays();
    let mut cones = Vec::new();
    for ca in a.max_cones() {
        for cb in b.max_cones() {
            let mut c = ca.clone();
            c.extend(cb.iter().map(|j| na + j));
            cones.push(c);
        }
    }
    Fan::new(ra + rb, rays, cones)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_validate() {
        for n in 1..=4 {
            let f = projective_space(n).unwrap();
            assert!(f.is_smooth_complete());
            assert_eq!(f.max_cones().len(), n + 1);
        }
        let f = product(&projective_space(1).unwrap(), &projective_space(2).unwrap()).unwrap();
        assert!(f.is_smooth_complete());
        assert_eq!(f.max_cones().len(), 6);
        assert_eq!(f.num_rays(), 5);
    }
}
