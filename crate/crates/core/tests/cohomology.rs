mod common;

use std::sync::LazyLock;

use bott_core::chow::{chi_twisted, toric_chow};
use bott_core::cohomology::{bott_check, hodge_twisted_cohomology, line_bundle_cohomology, Cohomology};
use bott_core::data::FanFile;
use bott_core::fan::{canonical_divisor, divisor_polytope, is_ample, nef_monoid_generators, picard_coords, Fan, TorusDivisor};
use bott_core::lattice::lattice_points;
use common::{big, data, random_divisor, random_nef, rng};
use proptest::prelude::*;

static RANK3: LazyLock<Vec<FanFile>> = LazyLock::new(common::rank3_fans);

fn pick(k: usize) -> &'static Fan {
    &RANK3[k % RANK3.len()].fan
}

fn untwisted_hodge_numbers(fan: &Fan) {
    let n = fan.rank();
    let zero = TorusDivisor::zero(fan.num_rays());
    let mut total = 0;
    for i in 0..=n {
        let h = hodge_twisted_cohomology(fan, i, &zero).unwrap().dims;
        for (j, &x) in h.iter().enumerate() {
            assert!(j == i || x == 0, "h^({i},{j}) = {x}");
        }
        total += h[i];
    }
    assert_eq!(total as usize, fan.max_cones().len());
}

#[test]
fn hodge_numbers_in_every_rank() {
    for name in ["p1", "p2", "p1xp1", "f1", "bl_pt_p1xp1", "p4", "p2xp2"] {
        untwisted_hodge_numbers(&data().fan(name).unwrap().fan);
    }
}

#[test]
fn bott_vanishing_on_non_fano_rank3_fans() {
    for name in ["y_4_4", "y_4_7", "z_4_5"] {
        let fan = data().fan(name).unwrap().fan;
        let gens = nef_monoid_generators(&fan).unwrap();
        let ample = gens.iter().fold(TorusDivisor::zero(fan.num_rays()), |a, g| a.add(g));
        assert!(is_ample(&fan, &ample).unwrap(), "{name}");
        assert!(bott_check(&fan, &ample).unwrap().pass, "{name}");
    }
}

#[test]
fn bott_check_reports_all_sheaves() {
    let fan = &data().fan("mm_2_34").unwrap().fan;
    let r = bott_check(fan, &canonical_divisor(fan)).unwrap();
    assert_eq!(r.sheaves.len(), 4);
    // h^0(O(-K)) = (-K)^3 / 2 + 3 on a Fano 3-fold
    assert_eq!(r.sheaves[0].dims, vec![30, 0, 0, 0]);
    assert_eq!(serde_json::to_value(&r).unwrap()["pass"], true);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn serre_duality(k in 0usize..64, seed in any::<u64>()) {
        let fan = pick(k);
        let d = random_divisor(&mut rng(seed), fan, 3);
        let kd = canonical_divisor(fan).neg().sub(&d);
        let mut h = line_bundle_cohomology(fan, &d).unwrap().dims;
        h.reverse();
        prop_assert_eq!(h, line_bundle_cohomology(fan, &kd).unwrap().dims);
    }

    #[test]
    fn euler_characteristic_matches_riemann_roch(k in 0usize..64, seed in any::<u64>()) {
        let fan = pick(k);
        let d = random_divisor(&mut rng(seed), fan, 3);
        let h = line_bundle_cohomology(fan, &d).unwrap();
        let x = picard_coords(fan, &d).unwrap();
        prop_assert_eq!(chi_twisted(&toric_chow(fan).unwrap(), 0, &x).unwrap(), big(h.euler()));
    }

    #[test]
    fn twisted_forms_match_riemann_roch(k in 0usize..64, seed in any::<u64>(), p in 0usize..=3) {
        let fan = pick(k);
        let gens = nef_monoid_generators(fan).unwrap();
        let d = random_nef(&mut rng(seed), fan, &gens);
        let c = Cohomology::new(fan).unwrap();
        let h = if p == 0 { c.line_bundle(&d) } else { c.hodge(p, &d) }.unwrap();
        let x = picard_coords(fan, &d).unwrap();
        prop_assert_eq!(chi_twisted(&toric_chow(fan).unwrap(), p, &x).unwrap(), big(h.euler()));
    }

    #[test]
    fn nef_sections_are_polytope_points(k in 0usize..64, seed in any::<u64>()) {
        let fan = pick(k);
        let gens = nef_monoid_generators(fan).unwrap();
        let d = random_nef(&mut rng(seed), fan, &gens);
        let h = line_bundle_cohomology(fan, &d).unwrap().dims;
        let points = lattice_points(&divisor_polytope(fan, &d).unwrap()).unwrap().len();
        prop_assert_eq!(h[0] as usize, points);
        prop_assert!(h[1..].iter().all(|&x| x == 0));
    }

    #[test]
    fn cached_and_fresh_queries_agree(k in 0usize..64, seed in any::<u64>()) {
        let fan = pick(k);
        let gens = nef_monoid_generators(fan).unwrap();
        let mut r = rng(seed);
        let c = Cohomology::new(fan).unwrap();
        for _ in 0..3 {
            let d = random_nef(&mut r, fan, &gens);
            prop_assert_eq!(c.hodge(1, &d).unwrap(), hodge_twisted_cohomology(fan, 1, &d).unwrap());
        }
    }
}
