//! Intersection numbers, Chern data and Riemann-Roch on smooth projective
//! 3-folds.

mod blowup;
mod ring;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{Map, Value};

use crate::class::parse_class;
use crate::error::{Error, Result};
use crate::fan::{
    intersect_divisors, picard_basis_divisors, picard_coords, product, projective_space, Fan, TorusDivisor,
};
use crate::lattice::{json_int, parse_json_int};

pub use blowup::{blowup_curve, blowup_point, CurveData};
pub use ring::{chi_twisted, BundleCharacter};

/// Divisor basis, the cubic form, `c_1`, the linear form `c_2 . (-)` and `c_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowModel3 {
    names: Vec<String>,
    triple: Vec<BigInt>,
    c1: Vec<BigInt>,
    c2: Vec<BigInt>,
    c3: BigInt,
}

impl ChowModel3 {
    /// `triple` is the full `r^3` table in row-major order.
    pub fn new(names: Vec<String>, triple: Vec<BigInt>, c1: Vec<BigInt>, c2: Vec<BigInt>, c3: BigInt) -> Result<Self> {
        let r = names.len();
        if triple.len() != r * r * r || c1.len() != r || c2.len() != r {
            return Err(Error::InconsistentChern(format!("shapes do not match a basis of size {r}")));
        }
        let m = ChowModel3 { names, triple, c1, c2, c3 };
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let v = m.triple(i, j, k);
                    if *v != *m.triple(j, i, k) || *v != *m.triple(i, k, j) {
                        return Err(Error::InconsistentChern(format!("triple form not symmetric at ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Builds the full table from a function on sorted index triples.
    pub(crate) fn from_fn(
        names: Vec<String>,
        mut f: impl FnMut(usize, usize, usize) -> Result<BigInt>,
        c1: Vec<BigInt>,
        c2: Vec<BigInt>,
        c3: BigInt,
    ) -> Result<Self> {
        let r = names.len();
        let mut triple = vec![BigInt::zero(); r * r * r];
        for i in 0..r {
            for j in i..r {
                for k in j..r {
                    let v = f(i, j, k)?;
                    for (a, b, c) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                        triple[(a * r + b) * r + c] = v.clone();
                    }
                }
            }
        }
        ChowModel3::new(names, triple, c1, c2, c3)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn triple(&self, i: usize, j: usize, k: usize) -> &BigInt {
        let r = self.rank();
        &self.triple[(i * r + j) * r + k]
    }

    /// `-K`.
    pub fn c1(&self) -> &[BigInt] {
        &self.c1
    }

    pub fn c2_pairing(&self) -> &[BigInt] {
        &self.c2
    }

    pub fn c3(&self) -> &BigInt {
        &self.c3
    }

    pub fn class(&self, text: &str) -> Result<Vec<BigInt>> {
        parse_class(text, &self.names)
    }

    pub(crate) fn check_class(&self, x: &[BigInt]) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: x.len() });
        }
        Ok(())
    }

    pub fn degree(&self, x: &[BigInt], y: &[BigInt], z: &[BigInt]) -> BigInt {
        let r = self.rank();
        let mut total = BigInt::zero();
        for i in 0..r {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..r {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..r {
                    total += &xy * &z[k] * self.triple(i, j, k);
                }
            }
        }
        total
    }

    /// `(-K)^3`.
    pub fn anticanonical_degree(&self) -> BigInt {
        self.degree(&self.c1, &self.c1, &self.c1)
    }

    pub fn c1c2(&self) -> BigInt {
        self.c1.iter().zip(&self.c2).map(|(a, b)| a * b).sum()
    }

    /// `c2 . x`.
    pub fn c2_dot(&self, x: &[BigInt]) -> BigInt {
        self.c2.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub(crate) fn product_pairing(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        let r = self.rank();
        let mut out = vec![BigRational::zero(); r];
        for i in 0..r {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..r {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let t = self.triple(i, j, k);
                    if !t.is_zero() {
                        *o += &xy * BigRational::from_integer(t.clone());
                    }
                }
            }
        }
        out
    }

    pub(crate) fn square_pairing(&self, x: &[BigRational]) -> Vec<BigRational> {
        self.product_pairing(x, x)
    }

    pub fn to_json(&self) -> Value {
        let r = self.rank();
        let mut triple = Map::new();
        for i in 0..r {
            for j in i..r {
                for k in j..r {
                    let v = self.triple(i, j, k);
                    if !v.is_zero() {
                        let key = format!("{}*{}*{}", self.names[i], self.names[j], self.names[k]);
                        triple.insert(key, json_int(v));
                    }
                }
            }
        }
        let named = |x: &[BigInt]| -> Value {
            Value::Object(self.names.iter().zip(x).map(|(n, a)| (n.clone(), json_int(a))).collect())
        };
        let mut m = Map::new();
        m.insert("basis".into(), Value::from(self.names.clone()));
        m.insert("triple".into(), Value::Object(triple));
        m.insert("c1".into(), named(&self.c1));
        m.insert("c2_pairing".into(), named(&self.c2));
        m.insert("c3".into(), json_int(&self.c3));
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Schema(format!("chow model: {what}"));
        let names: Vec<String> = v
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing basis"))?
            .iter()
            .map(|n| n.as_str().map(str::to_string).ok_or_else(|| bad("basis entries must be strings")))
            .collect::<Result<_>>()?;
        let r = names.len();
        let idx = |n: &str| names.iter().position(|x| x == n).ok_or_else(|| Error::UnknownName(n.to_string()));
        let named = |key: &str| -> Result<Vec<BigInt>> {
            let obj = v.get(key).and_then(Value::as_object).ok_or_else(|| bad(&format!("missing {key}")))?;
            let mut out = vec![BigInt::zero(); r];
            for (n, a) in obj {
                out[idx(n)?] = parse_json_int(a).ok_or_else(|| bad(&format!("{key}.{n} is not an integer")))?;
            }
            Ok(out)
        };
        let c1 = named("c1")?;
        let c2 = named("c2_pairing")?;
        let c3 = v.get("c3").and_then(parse_json_int).ok_or_else(|| bad("missing c3"))?;
        let entries = v.get("triple").and_then(Value::as_object).ok_or_else(|| bad("missing triple"))?;
        let mut triple = vec![BigInt::zero(); r * r * r];
        for (key, a) in entries {
            let parts: Vec<usize> = key.split('*').map(idx).collect::<Result<_>>()?;
            let [i, j, k] = parts[..] else { return Err(bad(&format!("bad triple key {key}"))) };
            let a = parse_json_int(a).ok_or_else(|| bad(&format!("triple {key} is not an integer")))?;
            for (x, y, z) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                triple[(x * r + y) * r + z] = a.clone();
            }
        }
        ChowModel3::new(names, triple, c1, c2, c3)
    }
}

/// Basis names and representatives of a fan: the named basis when present,
/// otherwise `D<rho>` over the internal Picard basis.
fn fan_basis(fan: &Fan) -> Result<(Vec<String>, Vec<TorusDivisor>)> {
    let names = match fan.basis() {
        Some(b) => b.names().to_vec(),
        None => fan.picard()?.basis_rays.iter().map(|r| format!("D{r}")).collect(),
    };
    Ok((names, picard_basis_divisors(fan)?))
}

fn anticanonical(fan: &Fan) -> TorusDivisor {
    TorusDivisor::new(vec![BigInt::from(1); fan.num_rays()])
}

/// Chow data of a smooth complete toric 3-fold.
pub fn toric_chow(fan: &Fan) -> Result<ChowModel3> {
    if fan.rank() != 3 {
        return Err(Error::FanRank { expected: 3, found: fan.rank() });
    }
    fan.require_valid()?;
    let (names, basis) = fan_basis(fan)?;
    let nr = fan.num_rays();
    let prime = |r: usize| TorusDivisor::prime(nr, r);
    let mut c2 = Vec::with_capacity(basis.len());
    for b in &basis {
        let mut s = BigInt::zero();
        for c in fan.cones_of_dim(2)? {
            s += intersect_divisors(fan, &[&prime(c[0]), &prime(c[1]), b])?;
        }
        c2.push(s);
    }
    let c1 = picard_coords(fan, &anticanonical(fan))?;
    let c3 = BigInt::from(fan.max_cones().len());
    ChowModel3::from_fn(names, |i, j, k| intersect_divisors(fan, &[&basis[i], &basis[j], &basis[k]]), c1, c2, c3)
}

/// Smooth hypersurface `X` in a smooth complete toric 4-fold, with divisor
/// classes restricted from the ambient basis. `X` is assumed to be a smooth
/// member of a linear system for which restriction of Picard groups is an
/// isomorphism.
pub fn hypersurface_chow(ambient: &Fan, x: &TorusDivisor) -> Result<ChowModel3> {
    if ambient.rank() != 4 {
        return Err(Error::FanRank { expected: 4, found: ambient.rank() });
    }
    ambient.require_valid()?;
    ambient.check_len(x)?;
    let (names, basis) = fan_basis(ambient)?;
    let nr = ambient.num_rays();
    let prime = |r: usize| TorusDivisor::prime(nr, r);
    let i4 = |a: &TorusDivisor, b: &TorusDivisor, c: &TorusDivisor, d: &TorusDivisor| intersect_divisors(ambient, &[a, b, c, d]);
    let c1y = anticanonical(ambient);
    // c2(Y) . a . b and c3(Y) . a as sums over orbit closures
    let c2y = |a: &TorusDivisor, b: &TorusDivisor| -> Result<BigInt> {
        let mut s = BigInt::zero();
        for c in ambient.cones_of_dim(2)? {
            s += i4(&prime(c[0]), &prime(c[1]), a, b)?;
        }
        Ok(s)
    };
    let mut c3y_x = BigInt::zero();
    for c in ambient.cones_of_dim(3)? {
        let ds: Vec<TorusDivisor> = c.iter().map(|&r| prime(r)).collect();
        c3y_x += i4(&ds[0], &ds[1], &ds[2], x)?;
    }
    let mut c2 = Vec::with_capacity(basis.len());
    for b in &basis {
        c2.push(c2y(b, x)? - i4(&c1y, x, b, x)? + i4(x, x, b, x)?);
    }
    let c3 = c3y_x - c2y(x, x)? + i4(&c1y, x, x, x)? - i4(x, x, x, x)?;
    let c1 = picard_coords(ambient, &c1y.sub(x))?;
    ChowModel3::from_fn(names, |i, j, k| i4(&basis[i], &basis[j], &basis[k], x), c1, c2, c3)
}

/// Smooth quadric 3-fold `Q` in `P^4`.
pub fn quadric3() -> Result<ChowModel3> {
    let p4 = projective_space(4)?;
    let x = TorusDivisor::prime(5, 0).scale(&BigInt::from(2));
    hypersurface_chow(&p4, &x)
}

/// The flag variety `W`, a divisor of bidegree `(1,1)` in `P^2 x P^2`.
pub fn flag_w() -> Result<ChowModel3> {
    let p2 = projective_space(2)?;
    let f = product(&p2, &p2)?;
    let a = TorusDivisor::prime(6, 0);
    let b = TorusDivisor::prime(6, 3);
    let f = f.with_basis(vec!["A".into(), "B".into()], vec![a.clone(), b.clone()])?;
    hypersurface_chow(&f, &a.add(&b))
}

/// `V_5`, entered directly: `H^3 = 5`, `c_1 = 2H`, `H . c_2 = 12`, `c_3 = 4`.
pub fn quintic_v5() -> Result<ChowModel3> {
    let z = |a: i64| BigInt::from(a);
    ChowModel3::new(vec!["H".into()], vec![z(5)], vec![z(2)], vec![z(12)], z(4))
}

/// `chi(X, T_X) = c1^3/2 - 19 c1 c2/24 + c3/2`.
pub fn chi_tangent(model: &ChowModel3) -> Result<BigInt> {
    let q = |a: BigInt| BigRational::from_integer(a);
    let v = q(model.anticanonical_degree()) / q(2.into()) - q(model.c1c2()) * BigRational::new(19.into(), 24.into())
        + q(model.c3().clone()) / q(2.into());
    if !v.is_integer() {
        return Err(Error::InconsistentChern(format!("chi(T) = {v}")));
    }
    Ok(v.to_integer())
}

/// `chi(X, T_X) = (-K)^3/2 - 18 + b2 - h21` for a Fano 3-fold.
pub fn chi_tangent_screen(degree: i64, b2: i64, h21: i64) -> Result<i64> {
    if degree % 2 != 0 {
        return Err(Error::OddDegree(degree));
    }
    Ok(degree / 2 - 18 + b2 - h21)
}

/// `chi(X, T_X)` from Riemann-Roch on the Chern character of `T_X`; agrees
/// with [`chi_tangent`].
pub fn chi_tangent_hrr(model: &ChowModel3) -> Result<BigInt> {
    BundleCharacter::tangent(model).euler_characteristic(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::tests::*;

    fn z(a: i64) -> BigInt {
        BigInt::from(a)
    }

    fn to_big(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn projective_space_numbers() {
        let m = toric_chow(&p3()).unwrap();
        assert_eq!(m.anticanonical_degree(), z(64));
        assert_eq!(m.c1c2(), z(24));
        assert_eq!(*m.c3(), z(4));
        assert_eq!(chi_tangent(&m).unwrap(), z(15));
        assert_eq!(chi_tangent_hrr(&m).unwrap(), z(15));
    }

    #[test]
    fn blown_up_projective_space() {
        let m = toric_chow(&bl_pt_p3()).unwrap();
        assert_eq!(m.anticanonical_degree(), z(56));
        assert_eq!(*m.c3(), z(6));
        assert_eq!(m.c1c2(), z(24));
    }

    #[test]
    fn quadric_threefold() {
        let q = quadric3().unwrap();
        assert_eq!(q.names(), ["H"]);
        assert_eq!(*q.triple(0, 0, 0), z(2));
        assert_eq!(q.c1(), [z(3)]);
        // c2 = 4H^2, so c2 . H = 8
        assert_eq!(q.c2_pairing(), [z(8)]);
        assert_eq!(*q.c3(), z(4));
        assert_eq!(chi_twisted(&q, 2, &[z(1)]).unwrap(), z(-1));
        assert_eq!(chi_tangent(&q).unwrap(), z(chi_tangent_screen(54, 1, 0).unwrap()));
        assert_eq!(chi_tangent(&q).unwrap(), z(10));
    }

    #[test]
    fn flag_threefold() {
        let w = flag_w().unwrap();
        assert_eq!(w.c1(), [z(2), z(2)]);
        assert_eq!(*w.c3(), z(6));
        assert_eq!(w.anticanonical_degree(), z(48));
        assert_eq!(chi_twisted(&w, 2, &[z(1), z(1)]).unwrap(), z(-1));
    }

    #[test]
    fn quintic_del_pezzo() {
        let v = quintic_v5().unwrap();
        assert_eq!(v.anticanonical_degree(), z(40));
        assert_eq!(chi_twisted(&v, 2, &[z(1)]).unwrap(), z(-3));
    }

    #[test]
    fn structure_sheaf_has_chi_one() {
        for m in [quadric3().unwrap(), flag_w().unwrap(), quintic_v5().unwrap(), toric_chow(&p1xp2()).unwrap()] {
            let zero = vec![z(0); m.rank()];
            assert_eq!(chi_twisted(&m, 0, &zero).unwrap(), z(1));
            assert_eq!(m.c1c2(), z(24));
        }
    }

    #[test]
    fn top_forms_are_canonical_bundle() {
        // Λ^3 Ω = O(K): chi(Ω^3(L)) = chi(O(L - c1))
        let m = toric_chow(&p1xp2()).unwrap();
        let l = to_big(&[1, 2]);
        let shifted: Vec<BigInt> = l.iter().zip(m.c1()).map(|(a, b)| a - b).collect();
        assert_eq!(chi_twisted(&m, 3, &l).unwrap(), chi_twisted(&m, 0, &shifted).unwrap());
    }

    #[test]
    fn hypersurface_of_three_factor_product() {
        let p1 = projective_space(1).unwrap();
        let p2 = projective_space(2).unwrap();
        let f = product(&product(&p1, &p1).unwrap(), &p2).unwrap();
        let (a, b, c) = (TorusDivisor::prime(7, 0), TorusDivisor::prime(7, 2), TorusDivisor::prime(7, 4));
        let f = f.with_basis(vec!["A".into(), "B".into(), "C".into()], vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let m = hypersurface_chow(&f, &a.add(&b).add(&c)).unwrap();
        assert_eq!(m.anticanonical_degree(), z(36));
        assert_eq!(chi_twisted(&m, 2, &to_big(&[1, 1, 1])).unwrap(), z(-1));
    }

    #[test]
    fn rank_errors() {
        assert!(matches!(toric_chow(&p2()), Err(Error::FanRank { expected: 3, found: 2 })));
        assert!(matches!(hypersurface_chow(&p3(), &div(&[0, 0, 0, 1])), Err(Error::FanRank { .. })));
        assert!(matches!(chi_tangent_screen(55, 1, 0), Err(Error::OddDegree(55))));
    }

    #[test]
    fn json_round_trip() {
        let m = toric_chow(&bl_pt_p3()).unwrap();
        let v = m.to_json();
        assert_eq!(v["basis"].as_array().unwrap().len(), 2);
        assert_eq!(v["c3"], serde_json::json!(6));
        assert_eq!(ChowModel3::from_json(&v).unwrap(), m);
    }
}
