//! Exact integer lattice arithmetic.

mod cone;
mod hilbert;
mod matrix;
mod polytope;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use cone::{dual_cone, Cone};
pub use hilbert::{hilbert_basis, MonoidBasis};
pub use matrix::{determinant, integer_inverse, rational_rank, rational_rank_i64};
pub use polytope::{lattice_points, Inequality, LatticePolytope};

/// Integer vector of fixed rank.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![BigInt::zero(); rank])
    }

    pub fn unit(rank: usize, k: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[k] = BigInt::from(1);
        v
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        debug_assert_eq!(self.rank(), other.rank());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| a * k).collect())
    }

    /// gcd of the coordinates (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == BigInt::from(1)
    }

    /// Divide out the content. The zero vector is returned unchanged.
    pub fn primitive(&self) -> LatticeVector {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        LatticeVector(self.0.iter().map(|a| a / &g).collect())
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|a| a.to_i64()).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|a| !a.is_negative())
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector::from_i64(&v)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(json_int))
    }
}

impl<'de> Deserialize<'de> for LatticeVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(d)?;
        raw.iter()
            .map(parse_json_int)
            .collect::<Option<Vec<_>>>()
            .map(LatticeVector)
            .ok_or_else(|| serde::de::Error::custom("expected integer coordinates"))
    }
}

/// Integers go out as JSON numbers when they fit in i64, as strings otherwise.
pub(crate) fn json_int(a: &BigInt) -> serde_json::Value {
    match a.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(a.to_string()),
    }
}

pub(crate) fn parse_json_int(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Sort and deduplicate a vector list into canonical order.
pub(crate) fn canonical(mut vs: Vec<LatticeVector>) -> Vec<LatticeVector> {
    vs.sort();
    vs.dedup();
    vs
}

pub(crate) fn rows_of(vs: &[LatticeVector]) -> Vec<Vec<BigInt>> {
    vs.iter().map(|v| v.coords().to_vec()).collect()
}
