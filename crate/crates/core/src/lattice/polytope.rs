use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cone::extreme_rays;
use super::LatticeVector;
use crate::error::{Error, Result};

/// `<m, normal> >= offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub normal: LatticeVector,
    #[serde(with = "big_int_json")]
    pub offset: BigInt,
}

impl Inequality {
    pub fn new(normal: LatticeVector, offset: BigInt) -> Self {
        Inequality { normal, offset }
    }

    pub fn holds(&self, m: &LatticeVector) -> bool {
        self.normal.dot(m) >= self.offset
    }
}

/// Polyhedron `{m : <m, normal_i> >= offset_i}`.
pub struct LatticePolytope {
    rank: usize,
    inequalities: Vec<Inequality>,
    hull: OnceLock<Hull>,
}

struct Hull {
    bounded: bool,
    vertices: Vec<Vec<BigRational>>,
}

impl LatticePolytope {
    pub fn new(rank: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        for q in &inequalities {
            if q.normal.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: q.normal.rank() });
            }
        }
        Ok(LatticePolytope { rank, inequalities, hull: OnceLock::new() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn contains(&self, m: &LatticeVector) -> bool {
        self.inequalities.iter().all(|q| q.holds(m))
    }

    /// Bounded iff the recession cone `{x : <x, normal_i> >= 0}` is zero.
    pub fn is_bounded(&self) -> bool {
        self.hull().bounded
    }

    /// Rational vertices in lexicographic order (empty for the empty set).
    pub fn vertices(&self) -> &[Vec<BigRational>] {
        &self.hull().vertices
    }

    fn hull(&self) -> &Hull {
        self.hull.get_or_init(|| {
            // homogenize: (x, t) with <x, n> - t*b >= 0 and t >= 0
            let n = self.rank;
            let mut cons: Vec<LatticeVector> = self
                .inequalities
                .iter()
                .map(|q| {
                    let mut c = q.normal.coords().to_vec();
                    c.push(-&q.offset);
                    LatticeVector::new(c)
                })
                .collect();
            cons.push(LatticeVector::unit(n + 1, n));
            let (lin, rays) = extreme_rays(n + 1, &cons);
            let bounded = lin.is_empty() && rays.iter().all(|r| !r.coords()[n].is_zero());
            let mut vertices: Vec<Vec<BigRational>> = rays
                .iter()
                .filter(|r| r.coords()[n].is_positive())
                .map(|r| {
                    let t = &r.coords()[n];
                    r.coords()[..n].iter().map(|a| BigRational::new(a.clone(), t.clone())).collect()
                })
                .collect();
            vertices.sort();
            Hull { bounded, vertices }
        })
    }
}

impl Clone for LatticePolytope {
    fn clone(&self) -> Self {
        LatticePolytope { rank: self.rank, inequalities: self.inequalities.clone(), hull: OnceLock::new() }
    }
}

impl std::fmt::Debug for LatticePolytope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LatticePolytope").field("rank", &self.rank).field("inequalities", &self.inequalities).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    inequalities: Vec<Inequality>,
}

impl Serialize for LatticePolytope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeJson { inequalities: self.inequalities.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePolytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolytopeJson::deserialize(d)?;
        let rank = j.inequalities.first().map(|q| q.normal.rank()).unwrap_or(0);
        LatticePolytope::new(rank, j.inequalities).map_err(serde::de::Error::custom)
    }
}

mod big_int_json {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(a: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&super::super::json_int(a), s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        super::super::parse_json_int(&v).ok_or_else(|| serde::de::Error::custom("expected integer"))
    }
}

type Row = (Vec<BigInt>, BigInt);

/// All lattice points, in lexicographic order.
pub fn lattice_points(poly: &LatticePolytope) -> Result<Vec<LatticeVector>> {
    if !poly.is_bounded() {
        return Err(Error::Unbounded);
    }
    let rows: Vec<Row> = poly.inequalities.iter().map(|q| (q.normal.coords().to_vec(), q.offset.clone())).collect();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(poly.rank);
    enumerate(poly.rank, &rows, &mut prefix, &mut out)?;
    Ok(out)
}

fn enumerate(k: usize, rows: &[Row], prefix: &mut Vec<BigInt>, out: &mut Vec<LatticeVector>) -> Result<()> {
    if k == 0 {
        if rows.iter().all(|(_, b)| !b.is_positive()) {
            out.push(LatticeVector::new(prefix.clone()));
        }
        return Ok(());
    }
    // bounds on the first remaining variable from Fourier-Motzkin
    let mut projected: Vec<Row> = rows.iter().map(|(a, b)| tighten(a.clone(), b.clone())).collect();
    for j in (1..k).rev() {
        projected = eliminate(projected, j);
    }
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for (a, b) in &projected {
        let c = &a[0];
        if c.is_zero() {
            if b.is_positive() {
                return Ok(());
            }
        } else if c.is_positive() {
            let v = b.div_ceil(c);
            lo = Some(lo.map_or(v.clone(), |l| l.max(v)));
        } else {
            let v = (-b).div_floor(&-c);
            hi = Some(hi.map_or(v.clone(), |h| h.min(v)));
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(Error::Unbounded);
    };
    let mut x = lo;
    while x <= hi {
        let sub: Vec<Row> = rows.iter().map(|(a, b)| (a[1..].to_vec(), b - &a[0] * &x)).collect();
        prefix.push(x.clone());
        enumerate(k - 1, &sub, prefix, out)?;
        prefix.pop();
        x += 1;
    }
    Ok(())
}

/// Divide by the content of the normal, rounding the offset up.
/// Valid for integer points only, which is all we enumerate.
fn tighten(a: Vec<BigInt>, b: BigInt) -> Row {
    let g = a.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return (a, b);
    }
    let b = b.div_ceil(&g);
    (a.into_iter().map(|x| x / &g).collect(), b)
}

fn eliminate(rows: Vec<Row>, j: usize) -> Vec<Row> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        if r.0[j].is_positive() {
            pos.push(r);
        } else if r.0[j].is_negative() {
            neg.push(r);
        } else {
            out.push(r);
        }
    }
    for (pa, pb) in &pos {
        for (na, nb) in &neg {
            let (cp, cn) = (&pa[j], -&na[j]);
            let a: Vec<BigInt> = pa.iter().zip(na).map(|(x, y)| x * &cn + y * cp).collect();
            let b = pb * &cn + nb * cp;
            out.push(tighten(a, b));
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(rank: usize, rows: &[(&[i64], i64)]) -> LatticePolytope {
        LatticePolytope::new(
            rank,
            rows.iter().map(|(n, b)| Inequality::new(LatticeVector::from_i64(n), BigInt::from(*b))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn segment() {
        let p = poly(1, &[(&[1], 0), (&[-1], -2)]);
        let pts = lattice_points(&p).unwrap();
        assert_eq!(pts, vec![LatticeVector::from_i64(&[0]), LatticeVector::from_i64(&[1]), LatticeVector::from_i64(&[2])]);
    }

    #[test]
    fn unit_triangle() {
        let p = poly(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], -1)]);
        assert_eq!(lattice_points(&p).unwrap().len(), 3);
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn infeasible_system() {
        let p = poly(1, &[(&[1], 1), (&[-1], 0)]);
        assert!(p.is_bounded());
        assert!(lattice_points(&p).unwrap().is_empty());
    }

    #[test]
    fn unbounded_region() {
        let p = poly(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        assert!(matches!(lattice_points(&p), Err(Error::Unbounded)));
    }

    #[test]
    fn thin_triangle_needs_rounding() {
        // 2x - 3y >= 0, y >= 1, x <= 4 : points (2,1),(3,1),(4,1),(3,2),(4,2)
        let p = poly(2, &[(&[2, -3], 0), (&[0, 1], 1), (&[-1, 0], -4)]);
        let pts: Vec<Vec<i64>> = lattice_points(&p).unwrap().iter().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(pts, vec![vec![2, 1], vec![3, 1], vec![3, 2], vec![4, 1], vec![4, 2]]);
    }

    #[test]
    fn json_shape() {
        let p = poly(1, &[(&[1], 0)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"inequalities":[{"normal":[1],"offset":0}]}"#);
    }
}
