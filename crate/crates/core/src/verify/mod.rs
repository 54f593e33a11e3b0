//! Recomputes the claims stored in a case file: curve-cone duality, nef
//! monoid generators, unit degrees, the ample decomposition, the
//! complete-intersection hypotheses, Chow-model invariants and Euler
//! characteristics.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chow::{chi_tangent, ChowModel3};
use crate::class::ClassSpec;
use crate::cohomology::{bott_check, Cohomology};
use crate::data::{AmbientFact, CaseFile, CiData, Construction, CurveTable, DataDir, InvariantRecord};
use crate::error::{Error, Result};
use crate::fan::{
    canonical_divisor, format_class, is_ample, is_nef, nef_cone, picard_basis_divisors, Fan, NamedBasis,
    TorusDivisor,
};
use crate::lattice::{dual_cone, hilbert_basis, Cone, LatticeVector};

mod box_check;

pub use box_check::decomposition_spot_check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "error")]
    Error,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub status: Status,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>, pass: bool) -> Check {
        Check {
            name: name.into(),
            expected: expected.into(),
            computed: computed.into(),
            pass,
            status: if pass { Status::Pass } else { Status::Fail },
        }
    }

    /// Passes when the two renderings agree.
    pub fn equal(name: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>) -> Check {
        let (e, c) = (expected.into(), computed.into());
        let pass = e == c;
        Check::new(name, e, c, pass)
    }

    pub fn error(name: impl Into<String>, expected: impl Into<String>, err: &Error) -> Check {
        Check { name: name.into(), expected: expected.into(), computed: err.to_string(), pass: false, status: Status::Error }
    }

    pub fn not_applicable(name: impl Into<String>, reason: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            expected: "n/a".into(),
            computed: reason.into(),
            pass: true,
            status: Status::NotApplicable,
        }
    }

    fn from_result(name: &str, expected: &str, r: Result<Check>) -> Check {
        r.unwrap_or_else(|e| Check::error(name, expected, &e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    pub bott_vanishing: bool,
    pub checks: Vec<Check>,
    pub assumed: Vec<String>,
    pub overall: bool,
}

impl CaseReport {
    fn new(case: &CaseFile, checks: Vec<Check>) -> CaseReport {
        let overall = checks.iter().all(|c| c.pass);
        CaseReport {
            id: case.id.clone(),
            bott_vanishing: case.bott_vanishing,
            checks,
            assumed: case.assumed.clone(),
            overall,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let verdict = if self.overall { "PASS" } else { "FAIL" };
        let claim = if self.bott_vanishing { "Bott vanishing claimed" } else { "Bott vanishing fails" };
        let _ = writeln!(s, "{} {verdict} ({claim})", self.id);
        for c in &self.checks {
            let _ = writeln!(s, "  [{}] {}: expected {}; computed {}", c.status, c.name, c.expected, c.computed);
        }
        if !self.assumed.is_empty() {
            let _ = writeln!(s, "  assumed:");
            for a in &self.assumed {
                let _ = writeln!(s, "    - {a}");
            }
        }
        s
    }
}

fn fmt_class(names: &[String], x: &[BigInt]) -> String {
    format_class(names, x)
}

fn fmt_set(names: &[String], xs: &[Vec<BigInt>]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| fmt_class(names, x)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn fmt_ints(xs: &[BigInt]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn primitive(x: &[BigInt]) -> Vec<BigInt> {
    LatticeVector::new(x.to_vec()).primitive().into_coords()
}

/// Renders `computed` in the order of `claimed` when the two sets agree.
fn set_check(name: &str, names: &[String], claimed: &[Vec<BigInt>], computed: Vec<Vec<BigInt>>) -> Check {
    let a: BTreeSet<Vec<BigInt>> = claimed.iter().cloned().collect();
    let b: BTreeSet<Vec<BigInt>> = computed.iter().cloned().collect();
    let expected = fmt_set(names, claimed);
    if a == b && a.len() == claimed.len() {
        Check::new(name, expected.clone(), expected, true)
    } else {
        let mut sorted = computed;
        sorted.sort();
        Check::new(name, expected, fmt_set(names, &sorted), false)
    }
}

struct CaseData<'a> {
    table: &'a CurveTable,
    curves: Vec<LatticeVector>,
    generators: Vec<Vec<BigInt>>,
}

fn case_data(case: &CaseFile) -> Result<CaseData<'_>> {
    let table = case.curves.as_ref().ok_or_else(|| Error::Schema(format!("{}: no curve table", case.id)))?;
    table.check(&case.basis)?;
    let curves = (0..table.curves.len()).map(|j| LatticeVector::new(table.curve(j))).collect();
    let generators = case.nef_generators.iter().map(|g| case.class(g)).collect::<Result<Vec<_>>>()?;
    Ok(CaseData { table, curves, generators })
}

fn curve_cone_dual(case: &CaseFile, data: &CaseData) -> Result<Cone> {
    let cone = Cone::new(case.basis.len(), data.curves.clone())?;
    Ok(dual_cone(&cone)?.normalized())
}

/// Every claimed generator pairs nonnegatively with every curve.
pub fn verify_generators_in_dual(case: &CaseFile) -> Check {
    const NAME: &str = "generators in dual";
    let run = || -> Result<Check> {
        let d = case_data(case)?;
        let mut bad = Vec::new();
        for (g, spec) in d.generators.iter().zip(&case.nef_generators) {
            for (c, name) in d.table.pairings(g).iter().zip(&d.table.curves) {
                if c.is_negative() {
                    bad.push(format!("({spec}).{name} = {c}"));
                }
            }
        }
        let computed = if bad.is_empty() { "all pairings >= 0".to_string() } else { bad.join(", ") };
        Ok(Check::new(NAME, "all pairings >= 0", computed, bad.is_empty()))
    };
    Check::from_result(NAME, "all pairings >= 0", run())
}

/// The dual of the curve cone equals the claimed generators as sets of primitive vectors.
pub fn verify_dual_cone(case: &CaseFile) -> Check {
    const NAME: &str = "dual cone";
    let run = || -> Result<Check> {
        let d = case_data(case)?;
        let dual = curve_cone_dual(case, &d)?;
        let claimed: Vec<Vec<BigInt>> = d.generators.iter().map(|g| primitive(g)).collect();
        let computed: Vec<Vec<BigInt>> = dual.generators().iter().map(|g| g.coords().to_vec()).collect();
        Ok(set_check(NAME, &case.basis, &claimed, computed))
    };
    Check::from_result(NAME, "dual of the curve cone", run())
}

/// The Hilbert basis of the nef cone equals the claimed generators.
pub fn verify_nef_monoid(case: &CaseFile) -> Check {
    const NAME: &str = "nef monoid";
    let run = || -> Result<Check> {
        let d = case_data(case)?;
        let dual = curve_cone_dual(case, &d)?;
        let hb = hilbert_basis(&dual)?;
        let computed: Vec<Vec<BigInt>> = hb.elements.iter().map(|g| g.coords().to_vec()).collect();
        Ok(set_check(NAME, &case.basis, &d.generators, computed))
    };
    Check::from_result(NAME, "Hilbert basis of the nef cone", run())
}

/// `-K . c = 1` for every curve exactly when the case says so.
pub fn verify_unit_degree(case: &CaseFile) -> Check {
    const NAME: &str = "-K unit degree";
    let Some(flag) = case.minus_k_unit_degree else {
        return Check::not_applicable(NAME, "no flag in case file");
    };
    let run = || -> Result<Check> {
        let d = case_data(case)?;
        let k = case.class(&case.minus_k)?;
        let deg = d.table.pairings(&k);
        let unit = deg.iter().all(|x| x.is_one());
        let expected = if flag { "all degrees 1" } else { "not all degrees 1" };
        let computed = format!("{} {}", if unit { "all degrees 1" } else { "not all degrees 1" }, fmt_ints(&deg));
        Ok(Check::new(NAME, expected, computed, unit == flag))
    };
    Check::from_result(NAME, "", run())
}

/// `base_ample . c = 1` for every curve, so every ample class is `base_ample` plus a nef class.
pub fn verify_decomposition(case: &CaseFile) -> Check {
    const NAME: &str = "decomposition";
    let Some(base) = &case.base_ample else {
        return Check::error(NAME, "base_ample present", &Error::Schema("missing base_ample".into()));
    };
    let run = || -> Result<Check> {
        let d = case_data(case)?;
        let b = case.class(base)?;
        let deg = d.table.pairings(&b);
        let unit = deg.iter().all(|x| x.is_one());
        let spot = decomposition_spot_check(&d.curves, &b, 2);
        let expected = format!("({base}).c = 1 for all curves; ample - ({base}) nef");
        let computed = format!(
            "degrees {}; {} ample classes in ({base}) + [-2,2]^{} checked, {} counterexamples",
            fmt_ints(&deg),
            spot.ample,
            case.basis.len(),
            spot.counterexamples
        );
        Ok(Check::new(NAME, expected, computed, unit && spot.counterexamples == 0))
    };
    Check::from_result(NAME, "", run())
}

/// Where a check's table row comes from.
fn table_row<'a>(table: &'a HashMap<String, InvariantRecord>, id: &str) -> Result<&'a InvariantRecord> {
    table.get(id).ok_or_else(|| Error::Schema(format!("{id} is not in the invariant table")))
}

fn model_in_case_basis(case: &CaseFile, model: &ChowModel3, x: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut out = vec![BigInt::zero(); case.basis.len()];
    if model.names().len() != case.basis.len() {
        return Err(Error::Schema(format!("model basis {:?} vs case basis {:?}", model.names(), case.basis)));
    }
    for (name, v) in model.names().iter().zip(x) {
        let k = case.basis.iter().position(|b| b == name).ok_or_else(|| Error::UnknownName(name.clone()))?;
        out[k] = v.clone();
    }
    Ok(out)
}

fn verify_construction(
    case: &CaseFile,
    k: usize,
    c: &Construction,
    dir: &DataDir,
    table: &HashMap<String, InvariantRecord>,
) -> Vec<Check> {
    let name = format!("model {k} invariants [{}]", c.model.describe());
    let mut out = Vec::new();
    let model = match c.model.build(dir) {
        Ok(m) => m,
        Err(e) => return vec![Check::error(name, "model builds", &e)],
    };
    match table_row(table, &case.id) {
        Err(e) => out.push(Check::error(&name, "table row", &e)),
        Ok(row) => {
            let expected = format!(
                "(-K)^3 = {}, b2 = {}, c3 = {}, c1c2 = 24",
                row.degree,
                row.b2,
                2 + 2 * row.b2 - 2 * row.h21
            );
            let computed = format!(
                "(-K)^3 = {}, b2 = {}, c3 = {}, c1c2 = {}",
                model.anticanonical_degree(),
                model.rank(),
                model.c3(),
                model.c1c2()
            );
            out.push(Check::equal(&name, expected, computed));
            let chi_name = format!("model {k} chi(T)");
            match (row.chi_tangent(), chi_tangent(&model)) {
                (Ok(e), Ok(v)) => out.push(Check::equal(chi_name, e.to_string(), v.to_string())),
                (Err(e), _) | (_, Err(e)) => out.push(Check::error(chi_name, "integer", &e)),
            }
        }
    }
    if c.same_basis {
        let cname = format!("model {k} c1 = -K");
        let r = (|| -> Result<Check> {
            let k = case.class(&case.minus_k)?;
            let c1 = model_in_case_basis(case, &model, model.c1())?;
            Ok(Check::equal(&cname, fmt_class(&case.basis, &k), fmt_class(&case.basis, &c1)))
        })();
        out.push(Check::from_result(&cname, &case.minus_k.to_string(), r));
    }
    out
}

fn named_basis(fan: &Fan) -> Result<&NamedBasis> {
    fan.basis().ok_or(Error::NoNamedBasis)
}

fn resolve(fan: &Fan, c: &ClassSpec) -> Result<(Vec<BigInt>, TorusDivisor)> {
    let b = named_basis(fan)?;
    let x = c.resolve(b.names())?;
    let d = b.divisor(&x);
    Ok((x, d))
}

fn positivity(fan: &Fan, d: &TorusDivisor) -> Result<&'static str> {
    Ok(if is_ample(fan, d)? {
        "ample"
    } else if is_nef(fan, d)? {
        "nef, not ample"
    } else {
        "not nef"
    })
}

fn positivity_check(name: String, fan: &Fan, x: &[BigInt], want: &str) -> Result<Check> {
    let b = named_basis(fan)?;
    let d = b.divisor(x);
    let p = positivity(fan, &d)?;
    let pass = match want {
        "nef" => p != "not nef",
        _ => p == want,
    };
    Ok(Check::new(name, want, format!("{} is {p}", fmt_class(b.names(), x)), pass))
}

/// `h^j(Omega^p(D))` for all `j`, with `p = 0` the line bundle.
fn hodge_dims(fan: &Fan, p: usize, d: &TorusDivisor) -> Result<Vec<u64>> {
    let c = Cohomology::new(fan)?;
    Ok(if p == 0 { c.line_bundle(d)? } else { c.hodge(p, d)? }.dims)
}

fn vanishing_check(name: String, fan: &Fan, p: usize, x: &[BigInt], above: usize) -> Result<Check> {
    let d = named_basis(fan)?.divisor(x);
    let dims = hodge_dims(fan, p, &d)?;
    let pass = dims.iter().skip(above + 1).all(|&h| h == 0);
    let expected = format!("h^j = 0 for j > {above}");
    Ok(Check::new(name, expected, format!("h^* = {dims:?}"), pass))
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Hypotheses of the complete-intersection criterion on the toric ambient,
/// plus the toric vanishing they feed into.
pub fn verify_ci_lemma(case: &CaseFile, dir: &DataDir) -> Vec<Check> {
    let Some(ci) = &case.complete_intersection else {
        return vec![Check::not_applicable("ci lemma", "no toric ambient data")];
    };
    match ci_checks(ci, dir) {
        Ok(v) => v,
        Err(e) => vec![Check::error("ci lemma", "ambient data loads", &e)],
    }
}

fn ci_checks(ci: &CiData, dir: &DataDir) -> Result<Vec<Check>> {
    let fan = dir.fan(&ci.ambient)?.fan;
    let b = named_basis(&fan)?;
    let names = b.names().to_vec();
    let s1 = ci.s1.resolve(&names)?;
    let s2 = ci.s2.resolve(&names)?;
    let l = ci.l.resolve(&names)?;
    let l1 = sub(&l, &s1);
    let l2 = sub(&l, &s2);
    let l12 = sub(&l1, &s2);
    let y = &ci.ambient;
    let mut out = Vec::new();
    let label = |x: &[BigInt]| fmt_class(&names, x);

    if ci.part == 1 {
        let k = b.coords(&fan, &canonical_divisor(&fan))?;
        out.push(Check::equal(format!("ci: L = -K on {y}"), label(&l), label(&k)));
    }
    out.push(positivity_check(format!("ci: L ample on {y}"), &fan, &l, "ample")?);
    out.push(positivity_check(format!("ci: L - S1 ample on {y}"), &fan, &l1, "ample")?);
    match ci.part {
        1 | 2 => {
            out.push(positivity_check(format!("ci: L - S2 ample on {y}"), &fan, &l2, "ample")?);
            out.push(positivity_check(format!("ci: L - S1 - S2 nef on {y}"), &fan, &l12, "nef")?);
        }
        3 => {
            let r = ci.restriction.as_ref().ok_or_else(|| Error::Schema("part 3 needs a restriction".into()))?;
            let surf = dir.fan(&r.surface)?.fan;
            let sb = named_basis(&surf)?;
            let images: Vec<Vec<BigInt>> = names
                .iter()
                .map(|n| {
                    r.map.get(n).ok_or_else(|| Error::UnknownName(n.clone())).and_then(|c| c.resolve(sb.names()))
                })
                .collect::<Result<_>>()?;
            let restrict = |x: &[BigInt]| -> Vec<BigInt> {
                (0..sb.names().len()).map(|j| x.iter().zip(&images).map(|(a, im)| a * &im[j]).sum()).collect()
            };
            let s = &r.surface;
            let (ra, rn) = (restrict(&l2), restrict(&l12));
            let ea = r.ample.resolve(sb.names())?;
            let en = r.nef.resolve(sb.names())?;
            out.push(Check::equal(
                format!("ci: (L - S2)|S1 on {s}"),
                fmt_class(sb.names(), &ea),
                fmt_class(sb.names(), &ra),
            ));
            out.push(positivity_check(format!("ci: (L - S2)|S1 ample on {s}"), &surf, &ra, "ample")?);
            out.push(Check::equal(
                format!("ci: (L - S1 - S2)|S1 on {s}"),
                fmt_class(sb.names(), &en),
                fmt_class(sb.names(), &rn),
            ));
            out.push(positivity_check(format!("ci: (L - S1 - S2)|S1 nef on {s}"), &surf, &rn, "nef")?);
        }
        p => return Err(Error::Schema(format!("unknown lemma part {p}"))),
    }
    if fan.rank() == 3 {
        out.push(vanishing_check(format!("ci: Omega^1_Y(L) on {y}"), &fan, 1, &l, 0)?);
        out.push(vanishing_check(format!("ci: Omega^1_Y(L - S1) on {y}"), &fan, 1, &l1, 0)?);
        if ci.part != 3 {
            out.push(vanishing_check(format!("ci: Omega^1_Y(L - S2) on {y}"), &fan, 1, &l2, 0)?);
            out.push(vanishing_check(format!("ci: Omega^1_Y(L - S1 - S2) on {y}"), &fan, 1, &l12, 1)?);
        }
    }
    Ok(out)
}

fn verify_fact(f: &AmbientFact, dir: &DataDir) -> Check {
    let name = match f {
        AmbientFact::Ample { fan, class } => format!("{fan}: {class} ample"),
        AmbientFact::Nef { fan, class } => format!("{fan}: {class} nef"),
        AmbientFact::NefNotAmple { fan, class } => format!("{fan}: {class} nef, not ample"),
        AmbientFact::NefCone { fan, .. } => format!("{fan}: nef cone"),
        AmbientFact::Bott { fan, class, p } => format!("{fan}: Omega^{p}({class}) Bott vanishing"),
        AmbientFact::NefVanishing { fan, class, p } => format!("{fan}: Omega^{p}({class}) vanishing above {p}"),
    };
    let r = (|| -> Result<Check> {
        let fan = dir.fan(f.fan())?.fan;
        match f {
            AmbientFact::Ample { class, .. } => positivity_check(name.clone(), &fan, &resolve(&fan, class)?.0, "ample"),
            AmbientFact::Nef { class, .. } => positivity_check(name.clone(), &fan, &resolve(&fan, class)?.0, "nef"),
            AmbientFact::NefNotAmple { class, .. } => {
                positivity_check(name.clone(), &fan, &resolve(&fan, class)?.0, "nef, not ample")
            }
            AmbientFact::NefCone { generators, .. } => {
                let b = named_basis(&fan)?;
                let claimed: Vec<Vec<BigInt>> =
                    generators.iter().map(|g| g.resolve(b.names()).map(|x| primitive(&x))).collect::<Result<_>>()?;
                // nef_cone uses the named basis coordinates
                debug_assert_eq!(picard_basis_divisors(&fan)?.len(), b.names().len());
                let cone = nef_cone(&fan)?;
                let computed = cone.generators().iter().map(|g| g.coords().to_vec()).collect();
                Ok(set_check(&name, b.names(), &claimed, computed))
            }
            AmbientFact::Bott { class, p, .. } => vanishing_check(name.clone(), &fan, *p, &resolve(&fan, class)?.0, 0),
            AmbientFact::NefVanishing { class, p, .. } => {
                vanishing_check(name.clone(), &fan, *p, &resolve(&fan, class)?.0, *p)
            }
        }
    })();
    Check::from_result(&name, "", r)
}

fn verify_toric_fan(case: &CaseFile, fan_name: &str, dir: &DataDir) -> Vec<Check> {
    let r = (|| -> Result<Vec<Check>> {
        let fan = dir.fan(fan_name)?.fan;
        let mut out = Vec::new();
        let k = canonical_divisor(&fan);
        let rep = bott_check(&fan, &k)?;
        out.push(Check::new(format!("{fan_name}: Bott for -K"), "pass", if rep.pass { "pass" } else { "fail" }, rep.pass));
        if let Some(b) = fan.basis() {
            for g in &case.nef_generators {
                let d = b.divisor(&g.resolve(b.names())?);
                if is_ample(&fan, &d)? {
                    let rep = bott_check(&fan, &d)?;
                    out.push(Check::new(
                        format!("{fan_name}: Bott for {g}"),
                        "pass",
                        if rep.pass { "pass" } else { "fail" },
                        rep.pass,
                    ));
                }
            }
        }
        Ok(out)
    })();
    r.unwrap_or_else(|e| vec![Check::error("toric Bott", "fan loads", &e)])
}

fn invariant_map(dir: &DataDir) -> Result<HashMap<String, InvariantRecord>> {
    Ok(dir.invariant_table()?.into_iter().map(|r| (r.id.clone(), r)).collect())
}

/// Runs every applicable check; errors become failed checks.
pub fn verify_case(case: &CaseFile, dir: &DataDir) -> CaseReport {
    match invariant_map(dir) {
        Ok(t) => verify_with_table(case, dir, &t),
        Err(e) => CaseReport::new(case, vec![Check::error("invariant table", "loads", &e)]),
    }
}

fn verify_with_table(case: &CaseFile, dir: &DataDir, table: &HashMap<String, InvariantRecord>) -> CaseReport {
    let mut checks = Vec::new();
    if case.curves.is_some() {
        checks.push(verify_generators_in_dual(case));
        checks.push(verify_dual_cone(case));
        checks.push(verify_nef_monoid(case));
        checks.push(verify_unit_degree(case));
        checks.push(verify_decomposition(case));
    } else if case.bott_vanishing {
        checks.push(Check::error("curve table", "present", &Error::Schema("no curve table".into())));
    }
    for (k, c) in case.constructions.iter().enumerate() {
        checks.extend(verify_construction(case, k + 1, c, dir, table));
    }
    if case.bott_vanishing || case.complete_intersection.is_some() {
        checks.extend(verify_ci_lemma(case, dir));
    }
    for f in &case.ambient_facts {
        checks.push(verify_fact(f, dir));
    }
    for claim in &case.chi_evidence {
        let name = format!("chi(Omega^{}({})) on {}", claim.p, claim.l, claim.model.describe());
        checks.push(match claim.evaluate(dir) {
            Ok(v) => Check::equal(name, claim.expected.to_string(), v.to_string()),
            Err(e) => Check::error(name, claim.expected.to_string(), &e),
        });
    }
    if let Some(f) = &case.toric_fan {
        checks.extend(verify_toric_fan(case, f, dir));
    }
    CaseReport::new(case, checks)
}

/// Sort key for ids like `(3.20)`.
pub fn id_key(id: &str) -> (u32, u32, String) {
    let t = id.trim_start_matches('(').trim_end_matches(')');
    let mut it = t.split('.').map(|p| p.parse::<u32>().unwrap_or(u32::MAX));
    (it.next().unwrap_or(u32::MAX), it.next().unwrap_or(u32::MAX), id.to_string())
}

/// Verifies every bundled case in parallel; reports come back in id order.
pub fn verify_all(dir: &DataDir) -> Result<Vec<CaseReport>> {
    let cases = dir.cases()?;
    let table = invariant_map(dir)?;
    let mut reports: Vec<CaseReport> = cases.par_iter().map(|c| verify_with_table(c, dir, &table)).collect();
    reports.sort_by_key(|r| id_key(&r.id));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dir() -> DataDir {
        DataDir::bundled()
    }

    #[test]
    fn case_2_30_dual_cone() {
        let c = dir().case("(2.30)").unwrap();
        let chk = verify_dual_cone(&c);
        assert!(chk.pass, "{chk:?}");
        assert_eq!(chk.computed, "{H - E, H}");
    }

    #[test]
    fn corrupted_entry_fails_dual_cone() {
        let mut c = dir().case("(2.30)").unwrap();
        c.curves.as_mut().unwrap().rows.get_mut("E").unwrap()[1] = 2;
        let r = verify_case(&c, &dir());
        assert!(!r.overall);
        assert!(!r.check("dual cone").unwrap().pass);
    }

    #[test]
    fn missing_base_ample_is_an_error() {
        let mut c = dir().case("(2.26)").unwrap();
        c.base_ample = None;
        assert_eq!(verify_decomposition(&c).status, Status::Error);
    }

    #[test]
    fn orthant_toy_case() {
        let c: CaseFile = serde_json::from_str(
            r#"{"id": "(9.9)", "bott_vanishing": true, "picard_basis": ["A", "B"], "minus_K": "2A+2B",
                "curves": {"curves": ["x", "y"], "rows": {"A": [1, 0], "B": [0, 1]}},
                "claimed_nef_generators": ["A", "B"], "base_ample": "A+B"}"#,
        )
        .unwrap();
        assert!(verify_nef_monoid(&c).pass);
        assert!(verify_decomposition(&c).pass);
        assert_eq!(verify_unit_degree(&c).status, Status::NotApplicable);
    }

    #[test]
    fn ids_sort_numerically() {
        let mut ids = vec!["(3.20)", "(3.9)", "(2.30)"];
        ids.sort_by_key(|i| id_key(i));
        assert_eq!(ids, ["(2.30)", "(3.9)", "(3.20)"]);
    }
}
