//! Sampling helpers and brute-force oracles shared by the integration tests
//! and the acceptance target.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use bott_core::chow::{chi_twisted, toric_chow};
use bott_core::cohomology::{bott_check, Cohomology};
use bott_core::data::{DataDir, FanFile};
use bott_core::fan::{canonical_divisor, nef_monoid_generators, picard_coords, Fan, TorusDivisor};
use bott_core::lattice::{dual_cone, hilbert_basis, lattice_points, Cone, Inequality, LatticePolytope, LatticeVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Outcome = Result<String, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn data() -> DataDir {
    DataDir::bundled()
}

pub fn rank3_fans() -> Vec<FanFile> {
    data().fan_files().unwrap().into_iter().filter(|f| f.fan.rank() == 3).collect()
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Rank over Q by plain elimination, reducing rows by their content.
pub fn rank_oracle(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let (a, b) = (m[rank][c].clone(), m[i][c].clone());
            let row: Vec<BigInt> = m[i].iter().zip(&m[rank]).map(|(x, y)| x * &a - y * &b).collect();
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            m[i] = if g.is_zero() { row } else { row.iter().map(|x| x / &g).collect() };
        }
        rank += 1;
    }
    rank
}

fn rows_of(v: &[LatticeVector]) -> Vec<Vec<BigInt>> {
    v.iter().map(|x| x.coords().to_vec()).collect()
}

fn random_vector(rng: &mut ChaCha8Rng, rank: usize, range: i64) -> LatticeVector {
    LatticeVector::from_i64(&(0..rank).map(|_| rng.gen_range(-range..=range)).collect::<Vec<_>>())
}

/// A positive functional on `cone`: the sum of the dual generators, kept
/// only after checking it is positive on every generator.
pub fn positive_functional(cone: &Cone) -> Option<LatticeVector> {
    let dual = dual_cone(cone).ok()?;
    let w = dual.generators().iter().fold(LatticeVector::zero(cone.rank()), |acc, u| &acc + u);
    cone.generators().iter().all(|g| g.dot(&w).is_positive()).then_some(w)
}

/// Random pointed full-dimensional cone with `rank..rank+2` generators.
pub fn random_pointed_cone(rng: &mut ChaCha8Rng, rank: usize, range: i64) -> Cone {
    loop {
        let k = rank + rng.gen_range(0..=2);
        let gens: Vec<LatticeVector> = (0..k).map(|_| random_vector(rng, rank, range)).collect();
        if gens.iter().any(|g| g.is_zero()) || rank_oracle(&rows_of(&gens)) != rank {
            continue;
        }
        let cone = Cone::new(rank, gens).unwrap();
        if cone.is_pointed() && positive_functional(&cone).is_some() {
            return cone;
        }
    }
}

/// Dual-dual involution plus a facet certificate for every dual generator.
pub fn check_dual_dual(cone: &Cone) -> Result<(), String> {
    let r = cone.rank();
    let dual = dual_cone(cone).map_err(|e| e.to_string())?.normalized();
    for u in dual.generators() {
        if cone.generators().iter().any(|g| g.dot(u).is_negative()) {
            return Err(format!("{u} is negative on a generator of {cone:?}"));
        }
        let tight: Vec<LatticeVector> = cone.generators().iter().filter(|g| g.dot(u).is_zero()).cloned().collect();
        if rank_oracle(&rows_of(&tight)) != r - 1 {
            return Err(format!("{u} is not tight on a facet of {cone:?}"));
        }
    }
    let back = dual_cone(&dual).map_err(|e| e.to_string())?.normalized();
    let orig = cone.normalized();
    if back.generators() != orig.generators() {
        return Err(format!("dual of dual {:?} != {:?}", back.generators(), orig.generators()));
    }
    Ok(())
}

fn in_cone(normals: &[LatticeVector], x: &LatticeVector) -> bool {
    normals.iter().all(|u| !u.dot(x).is_negative())
}

/// Calls `f` on every point of `[-b, b]^r`.
pub fn for_box(r: usize, b: i64, mut f: impl FnMut(&LatticeVector)) {
    let mut p = vec![-b; r];
    loop {
        f(&LatticeVector::from_i64(&p));
        let mut k = 0;
        while k < r && p[k] == b {
            p[k] = -b;
            k += 1;
        }
        if k == r {
            return;
        }
        p[k] += 1;
    }
}

/// Box containing every cone point `x` with `w(x) <= c`, from the generators.
fn degree_box(cone: &Cone, w: &LatticeVector, c: &BigInt) -> i64 {
    let mut best = 0i64;
    for g in cone.generators() {
        let norm = g.coords().iter().map(|x| x.abs()).max().unwrap();
        let b = (c * norm).div_ceil(&g.dot(w));
        best = best.max(b.to_i64().unwrap());
    }
    best
}

/// Minimality and boxed generation of the Hilbert basis, by brute force.
pub fn check_hilbert(cone: &Cone) -> Result<usize, String> {
    let hb = hilbert_basis(cone).map_err(|e| e.to_string())?.elements;
    check_monoid_basis(cone, &hb)
}

/// Every element of `hb` is irreducible in the cone monoid and every cone
/// point with coordinates up to three times the largest basis coordinate is
/// an N-combination of `hb`. Returns the number of boxed points.
pub fn check_monoid_basis(cone: &Cone, hb: &[LatticeVector]) -> Result<usize, String> {
    let r = cone.rank();
    let normals: Vec<LatticeVector> = dual_cone(cone).unwrap().generators().to_vec();
    let w = positive_functional(cone).ok_or("no positive functional")?;
    for h in hb {
        if h.is_zero() || !in_cone(&normals, h) {
            return Err(format!("{h} is not a nonzero cone point"));
        }
        let b = degree_box(cone, &w, &h.dot(&w));
        let mut split = None;
        for_box(r, b, |a| {
            if split.is_none() && !a.is_zero() && a != h && in_cone(&normals, a) && in_cone(&normals, &(h - a)) {
                split = Some(a.clone());
            }
        });
        if let Some(a) = split {
            return Err(format!("{h} = {a} + {}", h - &a));
        }
    }
    let m = hb.iter().flat_map(|h| h.coords().iter().map(|x| x.abs().to_i64().unwrap())).max().unwrap_or(1);
    let mut memo: HashMap<LatticeVector, bool> = HashMap::new();
    let mut missing = None;
    let mut count = 0;
    for_box(r, 3 * m, |p| {
        if missing.is_none() && in_cone(&normals, p) {
            count += 1;
            if !representable(p, hb, &normals, &mut memo) {
                missing = Some(p.clone());
            }
        }
    });
    match missing {
        Some(p) => Err(format!("{p} is not a sum of basis elements")),
        None => Ok(count),
    }
}

fn representable(
    p: &LatticeVector,
    hb: &[LatticeVector],
    normals: &[LatticeVector],
    memo: &mut HashMap<LatticeVector, bool>,
) -> bool {
    if p.is_zero() {
        return true;
    }
    if let Some(&v) = memo.get(p) {
        return v;
    }
    let v = hb.iter().any(|h| {
        let q = p - h;
        in_cone(normals, &q) && representable(&q, hb, normals, memo)
    });
    memo.insert(p.clone(), v);
    v
}

/// `lattice_points` against filtering a box, for a random polytope inside `[-b, b]^r`.
pub fn check_lattice_points(rng: &mut ChaCha8Rng, r: usize) -> Result<usize, String> {
    let b = rng.gen_range(1..=if r == 4 { 3 } else { 4 });
    let mut ineqs = Vec::new();
    for k in 0..r {
        ineqs.push(Inequality::new(LatticeVector::unit(r, k), big(-b)));
        ineqs.push(Inequality::new(-&LatticeVector::unit(r, k), big(-b)));
    }
    for _ in 0..rng.gen_range(0..=4) {
        ineqs.push(Inequality::new(random_vector(rng, r, 3), big(rng.gen_range(-2 * b..=b))));
    }
    let poly = LatticePolytope::new(r, ineqs.clone()).map_err(|e| e.to_string())?;
    let got: BTreeSet<LatticeVector> = lattice_points(&poly).map_err(|e| e.to_string())?.into_iter().collect();
    let mut want = BTreeSet::new();
    for_box(r, b, |m| {
        if ineqs.iter().all(|q| q.holds(m)) {
            want.insert(m.clone());
        }
    });
    if got != want {
        return Err(format!("rank {r} box {b}: {} points vs {} by filtering", got.len(), want.len()));
    }
    Ok(got.len())
}

pub fn random_divisor(rng: &mut ChaCha8Rng, fan: &Fan, range: i64) -> TorusDivisor {
    TorusDivisor::from_i64(&(0..fan.num_rays()).map(|_| rng.gen_range(-range..=range)).collect::<Vec<_>>())
}

/// Random nonnegative combination of the nef monoid generators, not all zero.
pub fn random_nef(rng: &mut ChaCha8Rng, fan: &Fan, gens: &[TorusDivisor]) -> TorusDivisor {
    loop {
        let d = gens
            .iter()
            .fold(TorusDivisor::zero(fan.num_rays()), |acc, g| acc.add(&g.scale(&big(rng.gen_range(0..=3)))));
        if d.coeffs().iter().any(|c| !c.is_zero()) {
            return d;
        }
    }
}

/// Criterion 3: Bott vanishing on the toric Fano fans for `-K` and `-K + g`.
pub fn toric_bott_suite() -> Outcome {
    let fans = data().toric_fano_fans().map_err(|e| e.to_string())?;
    if fans.len() != 18 {
        return Err(format!("{} toric Fano fans bundled, expected 18", fans.len()));
    }
    let mut checked = 0;
    for f in &fans {
        let k = canonical_divisor(&f.fan);
        let gens = nef_monoid_generators(&f.fan).map_err(|e| e.to_string())?;
        for d in std::iter::once(k.clone()).chain(gens.iter().map(|g| k.add(g))) {
            let rep = bott_check(&f.fan, &d).map_err(|e| format!("{}: {e}", f.name))?;
            if !rep.pass {
                return Err(format!("{}: {:?} fails with {:?}", f.name, d.coeffs(), rep.failures().collect::<Vec<_>>()));
            }
            checked += 1;
        }
    }
    Ok(format!("{} fans, {checked} ample twists", fans.len()))
}

/// Criterion 5: `h^j(Omega^i(D)) = 0` for `j > i` on random nef `D`.
pub fn nef_vanishing_suite(per_fan: usize, seed: u64) -> Outcome {
    let mut rng = rng(seed);
    let fans = rank3_fans();
    for f in &fans {
        let gens = nef_monoid_generators(&f.fan).map_err(|e| e.to_string())?;
        let coh = Cohomology::new(&f.fan).map_err(|e| e.to_string())?;
        for _ in 0..per_fan {
            let d = random_nef(&mut rng, &f.fan, &gens);
            for i in 0..=3 {
                let h = if i == 0 { coh.line_bundle(&d) } else { coh.hodge(i, &d) }.map_err(|e| e.to_string())?;
                if !h.vanishes_above(i) {
                    return Err(format!("{}: i = {i}, D = {:?}, h = {:?}", f.name, d.coeffs(), h.dims));
                }
            }
        }
    }
    Ok(format!("{} rank-3 fans x {per_fan} nef divisors x i = 0..3", fans.len()))
}

/// Criterion 6: Serre duality, Euler characteristic against Riemann-Roch,
/// and Hodge numbers from the untwisted complex.
pub fn cross_module_suite(per_fan: usize, seed: u64) -> Outcome {
    let mut rng = rng(seed);
    let fans = rank3_fans();
    for f in &fans {
        let fan = &f.fan;
        let coh = Cohomology::new(fan).map_err(|e| e.to_string())?;
        let model = toric_chow(fan).map_err(|e| e.to_string())?;
        let k = canonical_divisor(fan).neg();
        for _ in 0..per_fan {
            let d = random_divisor(&mut rng, fan, 3);
            let h = coh.line_bundle(&d).map_err(|e| e.to_string())?;
            let dual = coh.line_bundle(&k.sub(&d)).map_err(|e| e.to_string())?;
            let mut rev = dual.dims.clone();
            rev.reverse();
            if h.dims != rev {
                return Err(format!("{}: Serre duality fails for {:?}: {:?} vs {:?}", f.name, d.coeffs(), h.dims, dual.dims));
            }
            let x = picard_coords(fan, &d).map_err(|e| e.to_string())?;
            let chi = chi_twisted(&model, 0, &x).map_err(|e| e.to_string())?;
            if chi != big(h.euler()) {
                return Err(format!("{}: chi {:?} = {} but HRR gives {chi}", f.name, d.coeffs(), h.euler()));
            }
        }
        let zero = TorusDivisor::zero(fan.num_rays());
        let mut total = 0;
        for i in 0..=3 {
            let h = if i == 0 { coh.line_bundle(&zero) } else { coh.hodge(i, &zero) }.map_err(|e| e.to_string())?;
            if h.dims.iter().enumerate().any(|(j, &x)| j != i && x != 0) {
                return Err(format!("{}: h^(*,{i}) = {:?}", f.name, h.dims));
            }
            total += h.dims[i];
        }
        if total as usize != fan.max_cones().len() {
            return Err(format!("{}: sum h^(i,i) = {total}, {} maximal cones", f.name, fan.max_cones().len()));
        }
    }
    Ok(format!("{} rank-3 fans x {per_fan} divisors", fans.len()))
}

/// Criterion 7: the lattice kernel against brute force.
pub fn lattice_suite(seed: u64) -> Outcome {
    let mut rng = rng(seed);
    for k in 0..100 {
        let r = 2 + k % 3;
        let c = random_pointed_cone(&mut rng, r, 5);
        check_dual_dual(&c)?;
    }
    let mut points = 0;
    for k in 0..30 {
        let r = 2 + k % 2;
        let c = random_pointed_cone(&mut rng, r, 3);
        points += check_hilbert(&c)?;
    }
    let mut lp = 0;
    for k in 0..60 {
        lp += check_lattice_points(&mut rng, 1 + k % 4)?;
    }
    Ok(format!("100 dual-dual cones, 30 Hilbert bases ({points} boxed points), 60 polytopes ({lp} points)"))
}
