mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::LazyLock;

use bott_core::chow::toric_chow;
use bott_core::data::FanFile;
use bott_core::fan::{
    canonical_divisor, divisor_polytope, intersection_number, is_ample, is_nef, nef_monoid_generators, picard_coords,
    Fan, TorusDivisor,
};
use bott_core::lattice::LatticeVector;
use common::{big, data, random_divisor, random_nef, rng};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

static RANK3: LazyLock<Vec<FanFile>> = LazyLock::new(common::rank3_fans);

fn pick(k: usize) -> &'static Fan {
    &RANK3[k % RANK3.len()].fan
}

/// The character `m_sigma` with `<m, v_rho> = -a_rho` on the rays of cone `k`.
fn m_sigma(fan: &Fan, k: usize, d: &TorusDivisor) -> LatticeVector {
    let cone = &fan.max_cones()[k];
    let duals = fan.dual_basis(k).unwrap();
    for (i, u) in duals.iter().enumerate() {
        for (j, &r) in cone.iter().enumerate() {
            let want = if i == j { BigInt::one() } else { BigInt::zero() };
            assert_eq!(u.dot(&fan.rays()[r]), want, "dual basis of cone {k}");
        }
    }
    cone.iter().zip(duals).fold(LatticeVector::zero(fan.rank()), |acc, (&r, u)| &acc - &u.scale(d.coeff(r)))
}

/// Nef and ample from convexity of the support function.
fn support_positivity(fan: &Fan, d: &TorusDivisor) -> (bool, bool) {
    let (mut nef, mut ample) = (true, true);
    for (k, cone) in fan.max_cones().iter().enumerate() {
        let m = m_sigma(fan, k, d);
        for (r, v) in fan.rays().iter().enumerate() {
            if cone.contains(&r) {
                continue;
            }
            let s = v.dot(&m) + d.coeff(r);
            nef &= !s.is_negative();
            ample &= s.is_positive();
        }
    }
    (nef, ample)
}

#[test]
fn eighteen_toric_fano_fans_with_ample_anticanonical() {
    let fans = data().toric_fano_fans().unwrap();
    assert_eq!(fans.len(), 18);
    for f in &fans {
        assert!(f.fan.is_smooth_complete(), "{}", f.name);
        assert!(is_ample(&f.fan, &canonical_divisor(&f.fan)).unwrap(), "{}", f.name);
    }
}

#[test]
fn toric_signatures_match_invariant_table() {
    let table: HashMap<String, _> = data().invariant_table().unwrap().into_iter().map(|r| (r.id.clone(), r)).collect();
    let mut by_sig: BTreeMap<(BigInt, usize), Vec<String>> = BTreeMap::new();
    let mut fine = BTreeSet::new();
    for f in data().toric_fano_fans().unwrap() {
        let id = f.mm_id.clone().unwrap();
        let row = &table[&id];
        let m = toric_chow(&f.fan).unwrap();
        let sig = (m.anticanonical_degree(), m.rank());
        assert_eq!(sig, (big(row.degree), row.b2 as usize), "{id}");
        assert_eq!(*m.c3(), big(2 + 2 * row.b2 - 2 * row.h21), "{id}");
        let k = canonical_divisor(&f.fan);
        let mut squares: Vec<BigInt> = (0..f.fan.num_rays())
            .map(|r| intersection_number(&f.fan, &k, &k, &TorusDivisor::prime(f.fan.num_rays(), r)).unwrap())
            .collect();
        squares.sort();
        assert!(fine.insert((sig.clone(), squares)), "{id} is not separated from another fan");
        by_sig.entry(sig).or_default().push(id);
    }
    assert_eq!(fine.len(), 18);
    // Mori-Mukai classes sharing degree and Picard number
    let shared: Vec<Vec<String>> = by_sig.into_values().filter(|v| v.len() > 1).collect();
    let want = [["(5.2)", "(5.3)"], ["(3.27)", "(3.28)"], ["(3.29)", "(3.30)"], ["(2.33)", "(2.34)"]];
    assert_eq!(shared, want.map(|p| p.map(String::from).to_vec()).to_vec());
}

#[test]
fn nef_polytope_vertices_are_cone_characters() {
    for f in RANK3.iter() {
        let fan = &f.fan;
        let mut divs = vec![canonical_divisor(fan)];
        divs.extend(nef_monoid_generators(fan).unwrap());
        for d in divs {
            let p = divisor_polytope(fan, &d).unwrap();
            let got: BTreeSet<Vec<BigRational>> = p.vertices().iter().cloned().collect();
            let want: BTreeSet<Vec<BigRational>> = (0..fan.max_cones().len())
                .map(|k| m_sigma(fan, k, &d).coords().iter().map(|x| BigRational::from_integer(x.clone())).collect())
                .collect();
            assert_eq!(got, want, "{} {:?}", f.name, d.coeffs());
            if is_ample(fan, &d).unwrap() {
                assert_eq!(got.len(), fan.max_cones().len(), "{}", f.name);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn principal_divisors_have_trivial_class(k in 0usize..64, m in prop::collection::vec(-4i64..=4, 3)) {
        let fan = pick(k);
        let d = fan.principal_divisor(&LatticeVector::from_i64(&m));
        prop_assert!(picard_coords(fan, &d).unwrap().iter().all(Zero::is_zero));
        for w in fan.walls().unwrap() {
            prop_assert!(d.dot(&w.degrees).is_zero());
        }
    }

    #[test]
    fn positivity_matches_support_function(k in 0usize..64, seed in any::<u64>()) {
        let fan = pick(k);
        let d = random_divisor(&mut rng(seed), fan, 2);
        let (nef, ample) = support_positivity(fan, &d);
        prop_assert_eq!(is_nef(fan, &d).unwrap(), nef);
        prop_assert_eq!(is_ample(fan, &d).unwrap(), ample);
        prop_assert!(!ample || nef);
    }

    #[test]
    fn sum_of_nef_is_nef(k in 0usize..64, seed in any::<u64>()) {
        let fan = pick(k);
        let gens = nef_monoid_generators(fan).unwrap();
        let mut r = rng(seed);
        let (a, b) = (random_nef(&mut r, fan, &gens), random_nef(&mut r, fan, &gens));
        prop_assert!(is_nef(fan, &a).unwrap() && is_nef(fan, &b).unwrap());
        prop_assert!(is_nef(fan, &a.add(&b)).unwrap());
    }

    #[test]
    fn intersection_invariant_under_principal(
        k in 0usize..64,
        seed in any::<u64>(),
        m in prop::collection::vec(-3i64..=3, 3),
        slot in 0usize..3,
    ) {
        let fan = pick(k);
        let mut r = rng(seed);
        let mut ds: Vec<TorusDivisor> = (0..3).map(|_| random_divisor(&mut r, fan, 2)).collect();
        let before = intersection_number(fan, &ds[0], &ds[1], &ds[2]).unwrap();
        ds[slot] = ds[slot].add(&fan.principal_divisor(&LatticeVector::from_i64(&m)));
        prop_assert_eq!(intersection_number(fan, &ds[0], &ds[1], &ds[2]).unwrap(), before);
    }
}
