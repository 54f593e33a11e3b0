//! Chern characters on a 3-fold, truncated to degree 3.
//!
//! Degree-2 parts are stored only through their pairings with the basis
//! divisors, which is all Riemann-Roch on a 3-fold needs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ChowModel3;
use crate::error::{Error, Result};

type Q = BigRational;

fn q(a: i64) -> Q {
    Q::from_integer(BigInt::from(a))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleCharacter {
    pub rank: Q,
    pub ch1: Vec<Q>,
    // ch2 . B_k
    pub ch2: Vec<Q>,
    pub ch3: Q,
}

impl BundleCharacter {
    pub fn zero(r: usize) -> Self {
        BundleCharacter { rank: Q::zero(), ch1: vec![Q::zero(); r], ch2: vec![Q::zero(); r], ch3: Q::zero() }
    }

    pub fn one(r: usize) -> Self {
        BundleCharacter { rank: Q::one(), ..Self::zero(r) }
    }

    /// `ch(O(L))`.
    pub fn line(model: &ChowModel3, l: &[BigInt]) -> Self {
        let l: Vec<Q> = l.iter().map(|a| Q::from_integer(a.clone())).collect();
        let l2 = model.square_pairing(&l);
        let l3 = pair(&l, &l2);
        BundleCharacter {
            rank: Q::one(),
            ch2: l2.iter().map(|x| x / q(2)).collect(),
            ch3: l3 / q(6),
            ch1: l,
        }
    }

    /// `ch(T_X)` from the Chern classes by Newton's identities.
    pub fn tangent(model: &ChowModel3) -> Self {
        let c1: Vec<Q> = model.c1().iter().map(|a| Q::from_integer(a.clone())).collect();
        let c1sq = model.square_pairing(&c1);
        let c2: Vec<Q> = model.c2_pairing().iter().map(|a| Q::from_integer(a.clone())).collect();
        let c1c2 = pair(&c1, &c2);
        let c1cube = pair(&c1, &c1sq);
        let c3 = Q::from_integer(model.c3().clone());
        BundleCharacter {
            rank: q(3),
            ch2: c1sq.iter().zip(&c2).map(|(a, b)| (a - b * q(2)) / q(2)).collect(),
            ch3: (c1cube - c1c2 * q(3) + c3 * q(3)) / q(6),
            ch1: c1,
        }
    }

    pub fn todd(model: &ChowModel3) -> Self {
        let c1: Vec<Q> = model.c1().iter().map(|a| Q::from_integer(a.clone())).collect();
        let c1sq = model.square_pairing(&c1);
        let c2: Vec<Q> = model.c2_pairing().iter().map(|a| Q::from_integer(a.clone())).collect();
        let c1c2 = pair(&c1, &c2);
        BundleCharacter {
            rank: Q::one(),
            ch1: c1.iter().map(|a| a / q(2)).collect(),
            ch2: c1sq.iter().zip(&c2).map(|(a, b)| (a + b) / q(12)).collect(),
            ch3: c1c2 / q(24),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        BundleCharacter {
            rank: &self.rank + &o.rank,
            ch1: self.ch1.iter().zip(&o.ch1).map(|(a, b)| a + b).collect(),
            ch2: self.ch2.iter().zip(&o.ch2).map(|(a, b)| a + b).collect(),
            ch3: &self.ch3 + &o.ch3,
        }
    }

    pub fn scale(&self, k: &Q) -> Self {
        BundleCharacter {
            rank: &self.rank * k,
            ch1: self.ch1.iter().map(|a| a * k).collect(),
            ch2: self.ch2.iter().map(|a| a * k).collect(),
            ch3: &self.ch3 * k,
        }
    }

    pub fn mul(&self, o: &Self, model: &ChowModel3) -> Self {
        let r = self.ch1.len();
        let cross = model.product_pairing(&self.ch1, &o.ch1);
        let ch2: Vec<Q> =
            (0..r).map(|k| &self.rank * &o.ch2[k] + &o.rank * &self.ch2[k] + &cross[k]).collect();
        let ch3 = &self.rank * &o.ch3 + &o.rank * &self.ch3 + pair(&self.ch1, &o.ch2) + pair(&o.ch1, &self.ch2);
        BundleCharacter {
            ch1: self.ch1.iter().zip(&o.ch1).map(|(a, b)| &self.rank * b + &o.rank * a).collect(),
            rank: &self.rank * &o.rank,
            ch2,
            ch3,
        }
    }

    /// Adams operation: `ch_k(psi^j E) = j^k ch_k(E)`.
    pub fn adams(&self, j: i64) -> Self {
        let j = q(j);
        let j2 = &j * &j;
        let j3 = &j2 * &j;
        BundleCharacter {
            rank: self.rank.clone(),
            ch1: self.ch1.iter().map(|a| a * &j).collect(),
            ch2: self.ch2.iter().map(|a| a * &j2).collect(),
            ch3: &self.ch3 * j3,
        }
    }

    /// The dual bundle, `ch_k -> (-1)^k ch_k`.
    pub fn dual(&self) -> Self {
        self.adams(-1)
    }

    /// `ch(Λ^p E)` for `p <= 3` via the Adams operations.
    pub fn exterior_power(&self, p: usize, model: &ChowModel3) -> Result<Self> {
        let r = self.ch1.len();
        Ok(match p {
            0 => Self::one(r),
            1 => self.clone(),
            2 => self.mul(self, model).add(&self.adams(2).scale(&q(-1))).scale(&Q::new(1.into(), 2.into())),
            3 => {
                let e2 = self.mul(self, model);
                let e3 = e2.mul(self, model);
                let mixed = self.mul(&self.adams(2), model);
                e3.add(&mixed.scale(&q(-3))).add(&self.adams(3).scale(&q(2))).scale(&Q::new(1.into(), 6.into()))
            }
            _ => return Err(Error::InconsistentChern(format!("exterior power {p} on a 3-fold"))),
        })
    }

    /// `deg_3(ch * td)`.
    pub fn euler_characteristic(&self, model: &ChowModel3) -> Result<BigInt> {
        let v = self.mul(&Self::todd(model), model).ch3;
        if !v.is_integer() {
            return Err(Error::InconsistentChern(format!("Riemann-Roch gives {v}")));
        }
        Ok(v.to_integer())
    }
}

pub(super) fn pair(x: &[Q], curve: &[Q]) -> Q {
    x.iter().zip(curve).map(|(a, b)| a * b).sum()
}

/// `chi(X, Omega^p (L))`.
pub fn chi_twisted(model: &ChowModel3, p: usize, l: &[BigInt]) -> Result<BigInt> {
    model.check_class(l)?;
    let omega = BundleCharacter::tangent(model).dual().exterior_power(p, model)?;
    omega.mul(&BundleCharacter::line(model, l), model).euler_characteristic(model)
}
