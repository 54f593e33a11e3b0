use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Fan;
use crate::error::{Error, Result};
use crate::lattice::{determinant, integer_inverse, LatticeVector};

/// `D = sum a_rho D_rho`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TorusDivisor {
    pub coeffs: LatticeVector,
}

impl TorusDivisor {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        TorusDivisor { coeffs: LatticeVector::new(coeffs) }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        TorusDivisor { coeffs: LatticeVector::from_i64(coeffs) }
    }

    pub fn zero(len: usize) -> Self {
        TorusDivisor { coeffs: LatticeVector::zero(len) }
    }

    /// The prime divisor `D_rho`.
    pub fn prime(len: usize, rho: usize) -> Self {
        TorusDivisor { coeffs: LatticeVector::unit(len, rho) }
    }

    pub fn len(&self) -> usize {
        self.coeffs.rank()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coeff(&self, rho: usize) -> &BigInt {
        &self.coeffs.coords()[rho]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.coeffs.coords()
    }

    pub fn dot(&self, degrees: &[BigInt]) -> BigInt {
        self.coeffs().iter().zip(degrees).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &TorusDivisor) -> TorusDivisor {
        TorusDivisor { coeffs: &self.coeffs + &other.coeffs }
    }

    pub fn sub(&self, other: &TorusDivisor) -> TorusDivisor {
        TorusDivisor { coeffs: &self.coeffs - &other.coeffs }
    }

    pub fn scale(&self, k: &BigInt) -> TorusDivisor {
        TorusDivisor { coeffs: self.coeffs.scale(k) }
    }

    pub fn neg(&self) -> TorusDivisor {
        TorusDivisor { coeffs: -&self.coeffs }
    }
}

impl fmt::Debug for TorusDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.coeffs)
    }
}

/// Picard lattice presented by the rays outside a fixed maximal cone.
///
/// Every divisor is linearly equivalent to a unique one vanishing on the
/// rays of `base_rays`; its remaining coefficients are the class coordinates.
#[derive(Clone, Debug)]
pub struct PicardLattice {
    pub base_cone: usize,
    pub base_rays: Vec<usize>,
    pub basis_rays: Vec<usize>,
    pub(super) base_dual: Vec<LatticeVector>,
}

impl PicardLattice {
    pub fn rank(&self) -> usize {
        self.basis_rays.len()
    }

    /// Class coordinates of `d` with respect to `D_rho`, rho in `basis_rays`.
    pub fn class(&self, fan: &Fan, d: &TorusDivisor) -> Vec<BigInt> {
        let m = self
            .base_rays
            .iter()
            .zip(&self.base_dual)
            .fold(LatticeVector::zero(fan.rank()), |acc, (&r, u)| &acc + &u.scale(d.coeff(r)));
        let reduced = d.sub(&fan.principal_divisor(&m));
        self.basis_rays.iter().map(|&r| reduced.coeff(r).clone()).collect()
    }

    /// The representative `sum x_k D_{basis_rays[k]}`.
    pub fn representative(&self, fan: &Fan, x: &[BigInt]) -> TorusDivisor {
        let mut c = vec![BigInt::zero(); fan.num_rays()];
        for (&r, v) in self.basis_rays.iter().zip(x) {
            c[r] = v.clone();
        }
        TorusDivisor::new(c)
    }
}

/// Named Picard basis (`H`, `E1`, ...) with chosen torus-invariant
/// representatives.
#[derive(Clone, Debug)]
pub struct NamedBasis {
    names: Vec<String>,
    divisors: Vec<TorusDivisor>,
    // internal class coordinates -> named coordinates
    to_named: Vec<Vec<BigInt>>,
}

impl NamedBasis {
    pub(super) fn new(fan: &Fan, names: Vec<String>, divisors: Vec<TorusDivisor>) -> Result<NamedBasis> {
        let pic = fan.picard()?;
        if names.len() != pic.rank() || divisors.len() != names.len() {
            return Err(Error::InvalidFan(format!(
                "named basis has {} entries, Picard rank is {}",
                names.len(),
                pic.rank()
            )));
        }
        for d in &divisors {
            fan.check_len(d)?;
        }
        let rows: Vec<Vec<BigInt>> = divisors.iter().map(|d| pic.class(fan, d)).collect();
        let det = determinant(&rows);
        let inv = integer_inverse(&rows)
            .ok_or_else(|| Error::InvalidFan(format!("named classes {names:?} span a sublattice of index {det}")))?;
        Ok(NamedBasis { names, divisors, to_named: inv })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn divisors(&self) -> &[TorusDivisor] {
        &self.divisors
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `sum x_k B_k`.
    pub fn divisor(&self, x: &[BigInt]) -> TorusDivisor {
        let len = self.divisors[0].len();
        self.divisors.iter().zip(x).fold(TorusDivisor::zero(len), |acc, (d, c)| acc.add(&d.scale(c)))
    }

    /// Coordinates of the class of `d` in the named basis.
    pub fn coords(&self, fan: &Fan, d: &TorusDivisor) -> Result<Vec<BigInt>> {
        fan.check_len(d)?;
        let c = fan.picard()?.class(fan, d);
        let r = self.names.len();
        Ok((0..r).map(|j| (0..r).map(|i| &c[i] * &self.to_named[i][j]).sum()).collect())
    }
}

/// Renders integer coordinates as `2H - E1`.
pub fn format_class(names: &[String], x: &[BigInt]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(x) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigInt::zero();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
