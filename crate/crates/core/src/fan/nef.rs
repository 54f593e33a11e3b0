use num_bigint::BigInt;

use super::{Fan, TorusDivisor};
use crate::error::Result;
use crate::lattice::{dual_cone, hilbert_basis, Cone, LatticeVector};

/// The named basis if the fan has one, else `D_rho` for the Picard basis rays.
pub fn picard_basis_divisors(fan: &Fan) -> Result<Vec<TorusDivisor>> {
    if let Some(b) = fan.basis() {
        return Ok(b.divisors().to_vec());
    }
    let n = fan.num_rays();
    Ok(fan.picard()?.basis_rays.iter().map(|&r| TorusDivisor::prime(n, r)).collect())
}

/// Coordinates of the class of `d` in [`picard_basis_divisors`].
pub fn picard_coords(fan: &Fan, d: &TorusDivisor) -> Result<Vec<BigInt>> {
    match fan.basis() {
        Some(b) => b.coords(fan, d),
        None => {
            fan.check_len(d)?;
            Ok(fan.picard()?.class(fan, d))
        }
    }
}

/// Wall curves as vectors of degrees on the given Picard basis, deduplicated.
pub fn curve_classes(fan: &Fan, basis: &[TorusDivisor]) -> Result<Vec<LatticeVector>> {
    let mut out: Vec<LatticeVector> = Vec::new();
    for w in fan.walls()? {
        let v = LatticeVector::new(basis.iter().map(|b| b.dot(&w.degrees)).collect());
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort();
    Ok(out)
}

/// Nef cone in the coordinates of [`picard_basis_divisors`].
pub fn nef_cone(fan: &Fan) -> Result<Cone> {
    let basis = picard_basis_divisors(fan)?;
    let curves = curve_classes(fan, &basis)?;
    Ok(dual_cone(&Cone::new(basis.len(), curves)?)?.normalized())
}

/// Hilbert basis of the nef monoid, as torus-invariant divisors.
pub fn nef_monoid_generators(fan: &Fan) -> Result<Vec<TorusDivisor>> {
    let basis = picard_basis_divisors(fan)?;
    let cone = nef_cone(fan)?;
    let n = fan.num_rays();
    Ok(hilbert_basis(&cone)?
        .elements
        .iter()
        .map(|x| basis.iter().zip(x.coords()).fold(TorusDivisor::zero(n), |acc, (b, c)| acc.add(&b.scale(c))))
        .collect())
}
