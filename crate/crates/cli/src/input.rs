//! Parsing of fan, divisor, cone and model arguments.

use std::path::Path;

use bott_core::chow::{toric_chow, ChowModel3};
use bott_core::class::parse_class;
use bott_core::data::{load_fan_file, DataDir, FanFile, ModelRecipe};
use bott_core::fan::{canonical_divisor, Fan, TorusDivisor};
use bott_core::lattice::{Cone, LatticeVector};
use bott_core::Error;

/// A fan file path, or a bare name looked up in `fans/`.
pub fn fan(dir: &DataDir, arg: &str) -> Result<FanFile, Error> {
    let p = Path::new(arg);
    if p.is_file() {
        load_fan_file(p)
    } else {
        dir.fan(arg)
    }
}

/// `-K`, `K`, a JSON coefficient array over the rays, a class in the fan's
/// named basis, or a class in the ray divisors `D0 .. Dn`.
pub fn divisor(fan: &Fan, text: &str) -> Result<TorusDivisor, Error> {
    let t = text.trim();
    let n = fan.num_rays();
    match t {
        "-K" => return Ok(canonical_divisor(fan)),
        "K" => return Ok(TorusDivisor::new(canonical_divisor(fan).coeffs().iter().map(|c| -c).collect())),
        _ => {}
    }
    if t.starts_with('[') {
        let c: Vec<i64> = serde_json::from_str(t).map_err(|_| Error::ClassSyntax(t.to_string()))?;
        if c.len() != n {
            return Err(Error::RankMismatch { expected: n, found: c.len() });
        }
        return Ok(TorusDivisor::from_i64(&c));
    }
    if let Some(b) = fan.basis() {
        match parse_class(t, b.names()) {
            Ok(x) => return Ok(b.divisor(&x)),
            Err(Error::UnknownName(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let rays: Vec<String> = (0..n).map(|r| format!("D{r}")).collect();
    Ok(TorusDivisor::new(parse_class(t, &rays)?))
}

/// `[[1,0],[1,2]]`, or `{"rank": 2, "generators": [...]}`.
pub fn cone(text: &str) -> Result<Cone, Error> {
    let bad = |e: serde_json::Error| Error::Schema(format!("cone: {e}"));
    let v: serde_json::Value = serde_json::from_str(text).map_err(bad)?;
    if v.is_object() {
        return serde_json::from_value(v).map_err(bad);
    }
    let gens: Vec<LatticeVector> = serde_json::from_value(v).map_err(bad)?;
    let rank = match gens.first() {
        Some(g) => g.rank(),
        None => return Err(Error::Schema("cone: give at least one generator or use the object form".into())),
    };
    Cone::new(rank, gens)
}

fn id_key(s: &str) -> String {
    s.trim_start_matches('(').trim_end_matches(')').replace('_', ".")
}

/// A built-in model, a counterexample id, a case id with a construction,
/// or a toric fan.
pub fn model(dir: &DataDir, name: &str) -> Result<ChowModel3, Error> {
    if let Some(r) = ModelRecipe::named(name) {
        return r.build(dir);
    }
    let key = id_key(name);
    if key.contains('.') && key.split('.').all(|p| p.chars().all(|c| c.is_ascii_digit())) {
        if let Some(c) = dir.counterexamples()?.into_iter().find(|c| id_key(&c.id) == key) {
            return c.model.build(dir);
        }
        if let Ok(case) = dir.case(&key) {
            if let Some(c) = case.constructions.first() {
                return c.model.build(dir);
            }
            if let Some(f) = &case.toric_fan {
                return toric_chow(&dir.fan(f)?.fan);
            }
        }
        return Err(Error::UnknownName(name.to_string()));
    }
    toric_chow(&fan(dir, name)?.fan)
}
