use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Fan, TorusDivisor};
use crate::error::{Error, Result};

impl Fan {
    /// Degrees of all monomials `D_{r1} ... D_{rn}` (sorted multisets).
    fn table(&self) -> Result<&HashMap<Vec<usize>, BigInt>> {
        self.require_valid()?;
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let mut memo = HashMap::new();
        let mut mset = Vec::with_capacity(self.rank());
        self.fill(0, &mut mset, &mut memo)?;
        Ok(self.table.get_or_init(|| memo))
    }

    fn fill(&self, from: usize, mset: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, BigInt>) -> Result<()> {
        if mset.len() == self.rank() {
            self.monomial(mset.clone(), memo)?;
            return Ok(());
        }
        for r in from..self.num_rays() {
            mset.push(r);
            self.fill(r, mset, memo)?;
            mset.pop();
        }
        Ok(())
    }

    fn monomial(&self, mset: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigInt>) -> Result<BigInt> {
        if let Some(v) = memo.get(&mset) {
            return Ok(v.clone());
        }
        let mut support = mset.clone();
        support.dedup();
        let value = if !self.is_cone(&support) {
            BigInt::zero()
        } else if support.len() == mset.len() {
            BigInt::one()
        } else {
            // replace one copy of a repeated ray by an equivalent divisor
            // supported away from the first maximal cone containing the support
            let rho = mset.windows(2).find(|w| w[0] == w[1]).map(|w| w[0]).expect("repeat");
            let ci = self.first_max_cone_containing(&support).expect("cone");
            let cone = &self.max_cones()[ci];
            let k = cone.iter().position(|&r| r == rho).expect("ray in cone");
            let m = self.dual_basis(ci)?[k].clone();
            let pos = mset.iter().position(|&r| r == rho).unwrap();
            let mut total = BigInt::zero();
            for j in 0..self.num_rays() {
                if cone.contains(&j) {
                    continue;
                }
                let c = self.rays()[j].dot(&m);
                if c.is_zero() {
                    continue;
                }
                let mut next = mset.clone();
                next[pos] = j;
                next.sort_unstable();
                total -= c * self.monomial(next, memo)?;
            }
            total
        };
        memo.insert(mset, value.clone());
        Ok(value)
    }
}

/// `D_1 ... D_n` for `n` = rank of the fan.
pub fn intersect_divisors(fan: &Fan, divs: &[&TorusDivisor]) -> Result<BigInt> {
    if divs.len() != fan.rank() {
        return Err(Error::RankMismatch { expected: fan.rank(), found: divs.len() });
    }
    for d in divs {
        fan.check_len(d)?;
    }
    let table = fan.table()?;
    let supports: Vec<Vec<(usize, &BigInt)>> = divs
        .iter()
        .map(|d| d.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
        .collect();
    let mut total = BigInt::zero();
    let mut idx = vec![0usize; divs.len()];
    if supports.iter().any(|s| s.is_empty()) {
        return Ok(total);
    }
    loop {
        let mut key: Vec<usize> = idx.iter().zip(&supports).map(|(&i, s)| s[i].0).collect();
        key.sort_unstable();
        let v = &table[&key];
        if !v.is_zero() {
            let coeff: BigInt = idx.iter().zip(&supports).map(|(&i, s)| s[i].1.clone()).product();
            total += coeff * v;
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(total);
            }
            idx[k] += 1;
            if idx[k] < supports[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Triple intersection on a smooth complete 3-fold fan.
pub fn intersection_number(fan: &Fan, d1: &TorusDivisor, d2: &TorusDivisor, d3: &TorusDivisor) -> Result<BigInt> {
    if fan.rank() != 3 {
        return Err(Error::OnlyThreefolds);
    }
    intersect_divisors(fan, &[d1, d2, d3])
}
