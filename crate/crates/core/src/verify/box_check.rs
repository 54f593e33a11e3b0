use num_bigint::BigInt;
use num_traits::Signed;

use crate::lattice::LatticeVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpotCheck {
    /// Classes in the box that are strictly positive on every curve.
    pub ample: usize,
    /// Ample classes `p` with `p - base` negative on some curve.
    pub counterexamples: usize,
}

/// Tests `p - base` nef for every ample `p` in `base + [-bound, bound]^r`.
pub fn decomposition_spot_check(curves: &[LatticeVector], base: &[BigInt], bound: i64) -> SpotCheck {
    let r = base.len();
    let mut out = SpotCheck { ample: 0, counterexamples: 0 };
    let mut p = vec![-bound; r];
    loop {
        let x = &LatticeVector::from_i64(&p) + &LatticeVector::new(base.to_vec());
        if curves.iter().all(|c| c.dot(&x).is_positive()) {
            out.ample += 1;
            let y = &x - &LatticeVector::new(base.to_vec());
            if curves.iter().any(|c| c.dot(&y).is_negative()) {
                out.counterexamples += 1;
            }
        }
        let mut k = 0;
        while k < r && p[k] == bound {
            p[k] = -bound;
            k += 1;
        }
        if k == r {
            return out;
        }
        p[k] += 1;
    }
}
