//! Deterministic sweeps over the bundled data for `verify-all` and `reproduce-paper`.

use bott_core::chow::{chi_twisted, toric_chow};
use bott_core::cohomology::{bott_check, Cohomology};
use bott_core::data::{screen_nonnegative, DataDir, InvariantRecord, Screen};
use bott_core::fan::{canonical_divisor, is_ample, nef_monoid_generators, picard_coords, validate_fan};
use bott_core::Error;
use serde_json::{json, Value};

pub struct Suite {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Suite {
    fn from(name: &'static str, r: Result<String, String>) -> Suite {
        match r {
            Ok(detail) => Suite { name, pass: true, detail },
            Err(detail) => Suite { name, pass: false, detail },
        }
    }

    pub fn json(&self) -> Value {
        json!({"suite": self.name, "pass": self.pass, "detail": self.detail})
    }

    pub fn line(&self) -> String {
        format!("suite {}: {} ({})", self.name, if self.pass { "PASS" } else { "FAIL" }, self.detail)
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

pub struct ChiRow {
    pub id: String,
    pub name: String,
    pub model: String,
    pub p: usize,
    pub l: String,
    pub expected: i64,
    pub computed: Result<String, String>,
}

impl ChiRow {
    pub fn pass(&self) -> bool {
        self.computed.as_deref() == Ok(self.expected.to_string().as_str())
    }

    pub fn json(&self) -> Value {
        let computed = match &self.computed {
            Ok(v) => json!(v.parse::<i64>().ok()),
            Err(_) => Value::Null,
        };
        json!({
            "id": self.id, "name": self.name, "model": self.model, "p": self.p, "L": self.l,
            "expected": self.expected, "computed": computed, "pass": self.pass(),
            "error": self.computed.as_ref().err(),
        })
    }

    pub fn line(&self) -> String {
        let got = match &self.computed {
            Ok(v) => v.clone(),
            Err(e) => format!("error: {e}"),
        };
        let tag = if self.pass() { "ok" } else { "MISMATCH" };
        format!(
            "{} {}: chi(Omega^{}({})) = {got}, expected {} [{tag}]",
            self.id, self.model, self.p, self.l, self.expected
        )
    }
}

pub fn chi_rows(dir: &DataDir) -> Result<Vec<ChiRow>, Error> {
    Ok(dir
        .counterexamples()?
        .into_iter()
        .map(|c| ChiRow {
            computed: c.evaluate(dir).map(|v| v.to_string()).map_err(err),
            id: c.id.clone(),
            name: c.name.clone(),
            model: c.model.describe(),
            p: c.p,
            l: c.l.to_string(),
            expected: c.expected,
        })
        .collect())
}

pub fn screen(table: &[InvariantRecord]) -> Result<Screen, Error> {
    screen_nonnegative(table)
}

/// Every bundled fan is smooth and complete; toric Fano ones have ample `-K`.
fn fans(dir: &DataDir) -> Result<String, String> {
    let files = dir.fan_files().map_err(err)?;
    let mut fano = 0;
    for f in &files {
        let r = validate_fan(&f.fan);
        if !(r.smooth && r.complete) {
            return Err(format!("{}: {:?}", f.name, r.violations));
        }
        if f.toric_fano {
            if !is_ample(&f.fan, &canonical_divisor(&f.fan)).map_err(err)? {
                return Err(format!("{}: -K is not ample", f.name));
            }
            fano += 1;
        }
    }
    Ok(format!("{} fans, {fano} toric Fano", files.len()))
}

/// Bott vanishing for `-K` and `-K` plus each nef-monoid generator.
fn toric_bott(dir: &DataDir) -> Result<String, String> {
    let fans = dir.toric_fano_fans().map_err(err)?;
    let mut twists = 0;
    for f in &fans {
        let k = canonical_divisor(&f.fan);
        let gens = nef_monoid_generators(&f.fan).map_err(err)?;
        for d in std::iter::once(k.clone()).chain(gens.iter().map(|g| k.add(g))) {
            let rep = bott_check(&f.fan, &d).map_err(|e| format!("{}: {e}", f.name))?;
            if !rep.pass {
                return Err(format!("{}: {:?} fails", f.name, d.coeffs()));
            }
            twists += 1;
        }
    }
    Ok(format!("{} fans, {twists} ample twists", fans.len()))
}

/// On every rank-3 fan, for `D` a nef-monoid generator: `h^j(Omega^i(D)) = 0`
/// for `j > i`, and `chi(O(D))` agrees with Riemann-Roch.
fn nef_vanishing(dir: &DataDir) -> Result<String, String> {
    let fans: Vec<_> = dir.fan_files().map_err(err)?.into_iter().filter(|f| f.fan.rank() == 3).collect();
    let mut n = 0;
    for f in &fans {
        let coh = Cohomology::new(&f.fan).map_err(err)?;
        let chow = toric_chow(&f.fan).map_err(err)?;
        for d in nef_monoid_generators(&f.fan).map_err(err)? {
            for i in 0..=3 {
                let h = if i == 0 { coh.line_bundle(&d) } else { coh.hodge(i, &d) }.map_err(err)?;
                if !h.vanishes_above(i) {
                    return Err(format!("{}: i = {i}, D = {:?}, h = {:?}", f.name, d.coeffs(), h.dims));
                }
                if i == 0 {
                    let x = picard_coords(&f.fan, &d).map_err(err)?;
                    let rr = chi_twisted(&chow, 0, &x).map_err(err)?;
                    if rr != h.euler().into() {
                        return Err(format!("{}: chi(O({:?})) = {}, Riemann-Roch {rr}", f.name, d.coeffs(), h.euler()));
                    }
                }
            }
            n += 1;
        }
    }
    Ok(format!("{} rank-3 fans, {n} nef generators", fans.len()))
}

fn chi_claims(dir: &DataDir) -> Result<String, String> {
    let rows = chi_rows(dir).map_err(err)?;
    match rows.iter().find(|r| !r.pass()) {
        Some(r) => Err(r.line()),
        None => Ok(format!("{} claims", rows.len())),
    }
}

fn table(dir: &DataDir) -> Result<String, String> {
    let s = screen(&dir.invariant_table().map_err(err)?).map_err(err)?;
    Ok(format!("negative: {}, nonnegative: {}", s.negative.len(), s.nonnegative.len()))
}

/// The suites run by `verify-all` besides the case harness, in a fixed order.
pub fn all(dir: &DataDir) -> Vec<Suite> {
    vec![
        Suite::from("table", table(dir)),
        Suite::from("chi", chi_claims(dir)),
        Suite::from("fans", fans(dir)),
        Suite::from("toric-bott", toric_bott(dir)),
        Suite::from("nef-vanishing", nef_vanishing(dir)),
    ]
}
