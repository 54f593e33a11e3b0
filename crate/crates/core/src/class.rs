//! Divisor classes written in a named basis, e.g. `2H - E1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A class as written in a data file: either `"2H-E"` or `{"H": 2, "E": -1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassSpec {
    Text(String),
    Terms(BTreeMap<String, i64>),
}

impl ClassSpec {
    pub fn resolve(&self, names: &[String]) -> Result<Vec<BigInt>> {
        match self {
            ClassSpec::Text(s) => parse_class(s, names),
            ClassSpec::Terms(t) => {
                let mut out = vec![BigInt::zero(); names.len()];
                for (name, &c) in t {
                    let k = names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownName(name.clone()))?;
                    out[k] += c;
                }
                Ok(out)
            }
        }
    }
}

impl std::fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassSpec::Text(s) => write!(f, "{s}"),
            ClassSpec::Terms(t) => {
                let names: Vec<String> = t.keys().cloned().collect();
                let x: Vec<BigInt> = t.values().map(|&c| BigInt::from(c)).collect();
                write!(f, "{}", crate::fan::format_class(&names, &x))
            }
        }
    }
}

/// Parses `2H - E1 + 3*E2` (or `0`) into coordinates over `names`.
pub fn parse_class(text: &str, names: &[String]) -> Result<Vec<BigInt>> {
    let bad = || Error::ClassSyntax(text.to_string());
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(bad());
    }
    let mut out = vec![BigInt::zero(); names.len()];
    if chars == ['0'] {
        return Ok(out);
    }
    let mut pos = 0;
    let mut first = true;
    while pos < chars.len() {
        let mut sign = 1i64;
        match chars[pos] {
            '+' if !first => pos += 1,
            '+' => return Err(bad()),
            '-' => {
                sign = -1;
                pos += 1;
            }
            _ if !first => return Err(bad()),
            _ => {}
        }
        first = false;
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef: BigInt = if pos > start {
            chars[start..pos].iter().collect::<String>().parse().map_err(|_| bad())?
        } else {
            BigInt::from(1)
        };
        if pos < chars.len() && chars[pos] == '*' {
            if pos == start {
                return Err(bad());
            }
            pos += 1;
        }
        let nstart = pos;
        if pos >= chars.len() || !chars[pos].is_ascii_alphabetic() {
            return Err(bad());
        }
        while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || chars[pos] == '_') {
            pos += 1;
        }
        let name: String = chars[nstart..pos].iter().collect();
        let k = names.iter().position(|n| *n == name).ok_or(Error::UnknownName(name))?;
        out[k] += coef * sign;
    }
    Ok(out)
}
