mod common;

use std::sync::LazyLock;

use bott_core::data::CaseFile;
use bott_core::verify::{verify_all, verify_case, verify_dual_cone, verify_generators_in_dual, Status};
use common::{data, rng};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use rand::Rng;

static CASES: LazyLock<Vec<CaseFile>> =
    LazyLock::new(|| data().cases().unwrap().into_iter().filter(|c| c.base_ample.is_some()).collect());

#[test]
fn all_cases_pass() {
    let reports = verify_all(&data()).unwrap();
    assert_eq!(reports.len(), 19);
    for r in &reports {
        assert!(r.overall, "{}", r.render_text());
        assert!(r.checks.iter().all(|c| c.status != Status::Error), "{}", r.id);
    }
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(&ids[..4], ["(2.26)", "(2.30)", "(3.15)", "(3.16)"]);
    assert_eq!(ids.last(), Some(&"(5.1)"));
}

#[test]
fn generators_lie_in_dual_for_every_case() {
    for c in data().cases().unwrap().iter().filter(|c| c.curves.is_some()) {
        assert!(verify_generators_in_dual(c).pass, "{}", c.id);
    }
}

#[test]
fn corrupted_entry_is_pinpointed() {
    let dir = data();
    let mut c = dir.case("(3.22)").unwrap();
    let t = c.curves.as_mut().unwrap();
    let (name, row) = t.rows.iter_mut().next().unwrap();
    let name = name.clone();
    row[0] += 3;
    let r = verify_case(&c, &dir);
    assert!(!r.overall);
    assert!(!verify_dual_cone(&c).pass, "{name}");
    assert!(!r.check("dual cone").unwrap().pass);
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let render = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| serde_json::to_string(&verify_all(&data()).unwrap()).unwrap())
    };
    let one = render(1);
    assert_eq!(one, render(4));
    assert_eq!(one, render(1));
}

#[test]
fn reports_list_assumptions() {
    for r in verify_all(&data()).unwrap() {
        if r.bott_vanishing {
            assert!(!r.assumed.is_empty(), "{}", r.id);
            assert!(r.render_text().contains("assumed:"), "{}", r.id);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn ample_classes_decompose(k in 0usize..64, seed in any::<u64>()) {
        let case = &CASES[k % CASES.len()];
        let t = case.curves.as_ref().unwrap();
        let base = case.class(case.base_ample.as_ref().unwrap()).unwrap();
        let mut r = rng(seed);
        let p = loop {
            let p: Vec<BigInt> = (0..case.basis.len()).map(|_| BigInt::from(r.gen_range(-8i64..=8))).collect();
            if t.pairings(&p).iter().all(|x| x.is_positive()) {
                break p;
            }
        };
        let rest: Vec<BigInt> = p.iter().zip(&base).map(|(a, b)| a - b).collect();
        prop_assert!(t.pairings(&rest).iter().all(|x| !x.is_negative()), "{}: {:?}", case.id, p);
    }
}
