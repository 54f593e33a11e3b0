//! Blow-ups of 3-folds at a point or along a smooth curve.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::ChowModel3;
use crate::error::{Error, Result};

/// A smooth curve `C` in the base: `D . C` for each basis divisor and its genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveData {
    pub degrees: Vec<i64>,
    pub genus: i64,
}

fn extend(base: &ChowModel3, name: &str, exceptional: impl Fn(usize, usize) -> BigInt) -> Result<(Vec<String>, Vec<BigInt>)> {
    if base.names().iter().any(|n| n == name) {
        return Err(Error::InvalidCurve(format!("divisor name {name} already in use")));
    }
    let r = base.rank();
    let mut names = base.names().to_vec();
    names.push(name.to_string());
    let s = r + 1;
    let mut triple = vec![BigInt::zero(); s * s * s];
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                let e = [i, j, k].iter().filter(|&&x| x == r).count();
                let v = if e == 0 {
                    base.triple(i, j, k).clone()
                } else {
                    // the non-exceptional index, if any, decides the value
                    let other = [i, j, k].into_iter().find(|&x| x != r).unwrap_or(r);
                    exceptional(e, other)
                };
                triple[(i * s + j) * s + k] = v;
            }
        }
    }
    Ok((names, triple))
}

/// Blow-up at a point: `E^3 = 1`, `-K = pi^*(-K) - 2E`, `c_2 . E = 0`,
/// Euler characteristic up by 2.
pub fn blowup_point(base: &ChowModel3, name: &str) -> Result<ChowModel3> {
    let (names, triple) = extend(base, name, |e, _| if e == 3 { BigInt::from(1) } else { BigInt::zero() })?;
    let mut c1 = base.c1().to_vec();
    c1.push(BigInt::from(-2));
    let mut c2 = base.c2_pairing().to_vec();
    c2.push(BigInt::zero());
    ChowModel3::new(names, triple, c1, c2, base.c3() + 2)
}

/// Blow-up along a smooth curve `C` of genus `g`:
/// `pi^*D . E^2 = -D.C`, `E^3 = -deg N = -(-K.C + 2g - 2)`, `-K = pi^*(-K) - E`,
/// `c_2 . pi^*D = c_2 . D + D.C`, `c_2 . E = -K.C`, Euler characteristic up by `2 - 2g`.
pub fn blowup_curve(base: &ChowModel3, name: &str, curve: &CurveData) -> Result<ChowModel3> {
    let r = base.rank();
    if curve.degrees.len() != r {
        return Err(Error::InvalidCurve(format!("{} degrees for a basis of size {r}", curve.degrees.len())));
    }
    if curve.genus < 0 {
        return Err(Error::InvalidCurve(format!("negative genus {}", curve.genus)));
    }
    let deg: Vec<BigInt> = curve.degrees.iter().map(|&a| BigInt::from(a)).collect();
    let kc: BigInt = base.c1().iter().zip(&deg).map(|(a, b)| a * b).sum();
    let g = BigInt::from(curve.genus);
    let normal = &kc + &g * 2 - 2;
    let (names, triple) = extend(base, name, |e, other| match e {
        1 => BigInt::zero(),
        2 => -&deg[other],
        _ => -&normal,
    })?;
    let mut c1 = base.c1().to_vec();
    c1.push(BigInt::from(-1));
    let mut c2: Vec<BigInt> = base.c2_pairing().iter().zip(&deg).map(|(a, b)| a + b).collect();
    c2.push(kc);
    ChowModel3::new(names, triple, c1, c2, base.c3() + 2 - g * 2)
}
