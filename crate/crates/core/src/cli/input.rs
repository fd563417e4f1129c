//! Input documents: the intersection tensor on sorted index triples, the
//! `c2` pairing, named divisors and the user's assertions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use super::document::AssumptionsJson;
use crate::certify::Assumptions;
use crate::error::{Error, Result};
use crate::exactmath::{fmt_rat, parse_rat, Rat};
use crate::nsring::{Divisor, IntersectionForm, LinearClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub form: IntersectionForm,
    pub c2: LinearClass,
    pub divisors: BTreeMap<String, Divisor>,
    pub assumptions: Assumptions,
}

impl InputDocument {
    pub fn rank(&self) -> usize {
        self.form.rank()
    }

    pub fn divisor(&self, name: &str) -> Result<&Divisor> {
        self.divisors.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.divisors.keys().map(String::as_str).collect();
            Error::Invalid(format!("no divisor named {name:?} (known: {})", known.join(", ")))
        })
    }
}

fn rat_value(v: &Value) -> std::result::Result<Rat, String> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rat::from_integer(i.into())),
            None => Err(format!("{n} is not an integer; write non-integers as \"p/q\"")),
        },
        Value::String(s) => parse_rat(s).map_err(|e| e.to_string()),
        other => Err(format!("expected a rational, found {other}")),
    }
}

fn int_value(v: &Value) -> std::result::Result<BigInt, String> {
    let q = rat_value(v)?;
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(format!("expected an integer, found {}", fmt_rat(&q)))
    }
}

fn rat_list(v: &Value, n: usize, what: &str, errs: &mut Vec<String>) -> Option<Vec<Rat>> {
    let Some(items) = v.as_array() else {
        errs.push(format!("{what}: expected a list"));
        return None;
    };
    if items.len() != n {
        errs.push(format!("{what}: rank mismatch, expected {n} entries, found {}", items.len()));
        return None;
    }
    let mut out = Vec::with_capacity(n);
    for (i, x) in items.iter().enumerate() {
        match rat_value(x) {
            Ok(q) => out.push(q),
            Err(e) => errs.push(format!("{what}[{i}]: {e}")),
        }
    }
    (out.len() == n).then_some(out)
}

/// Parse and validate a JSON input document. All problems found are
/// reported together, one per line, each prefixed with its location.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let Some(obj) = root.as_object() else {
        return Err(Error::Parse("top level must be an object".into()));
    };
    let mut errs = Vec::new();
    for k in obj.keys() {
        if !["rank", "intersection", "c2", "divisors", "assumptions"].contains(&k.as_str()) {
            errs.push(format!("unknown field {k:?}"));
        }
    }
    let rank = match obj.get("rank").map(|v| v.as_u64()) {
        Some(Some(r)) if r >= 1 => r as usize,
        Some(_) => return Err(Error::Parse("rank: expected an integer n ≥ 1".into())),
        None => return Err(Error::Parse("missing field \"rank\"".into())),
    };

    let mut entries = Vec::new();
    let mut seen = BTreeSet::new();
    match obj.get("intersection").map(Value::as_array) {
        Some(Some(list)) => {
            for (e, item) in list.iter().enumerate() {
                let at = format!("intersection[{e}]");
                let Some(q) = item.as_array().filter(|q| q.len() == 4) else {
                    errs.push(format!("{at}: expected [i, j, k, value]"));
                    continue;
                };
                let idx: Vec<Option<usize>> = q[..3].iter().map(|x| x.as_u64().map(|u| u as usize)).collect();
                let (Some(i), Some(j), Some(k)) = (idx[0], idx[1], idx[2]) else {
                    errs.push(format!("{at}: indices must be non-negative integers"));
                    continue;
                };
                if !(i <= j && j <= k) {
                    errs.push(format!("{at}: indices must satisfy i ≤ j ≤ k, got [{i}, {j}, {k}]"));
                    continue;
                }
                if k >= rank {
                    errs.push(format!("{at}: index out of range in [{i}, {j}, {k}] for rank {rank}"));
                    continue;
                }
                if !seen.insert((i, j, k)) {
                    errs.push(format!("{at}: duplicate key [{i}, {j}, {k}]"));
                    continue;
                }
                match int_value(&q[3]) {
                    Ok(v) => entries.push(((i, j, k), v)),
                    Err(m) => errs.push(format!("{at}: {m}")),
                }
            }
        }
        Some(None) => errs.push("intersection: expected a list".into()),
        None => errs.push("missing field \"intersection\"".into()),
    }

    let c2 = match obj.get("c2") {
        Some(v) => rat_list(v, rank, "c2", &mut errs),
        None => {
            errs.push("missing field \"c2\"".into());
            None
        }
    };

    let mut divisors = BTreeMap::new();
    match obj.get("divisors").map(Value::as_object) {
        Some(Some(map)) => {
            for (name, v) in map {
                if name.is_empty() || name.contains(char::is_whitespace) {
                    errs.push(format!("divisors.{name:?}: names must be nonempty without spaces"));
                    continue;
                }
                if let Some(c) = rat_list(v, rank, &format!("divisors.{name}"), &mut errs) {
                    divisors.insert(name.clone(), Divisor::named(name.clone(), c));
                }
            }
        }
        Some(None) => errs.push("divisors: expected an object".into()),
        None => {}
    }

    let mut assumptions = Assumptions { d_is_nef_nonample: false, h_is_ample: None, x_is_calabi_yau: false };
    match obj.get("assumptions").map(Value::as_object) {
        Some(Some(map)) => {
            for (k, v) in map {
                let b = match v {
                    Value::Bool(b) => Some(*b),
                    Value::Null => None,
                    _ => {
                        errs.push(format!("assumptions.{k}: expected true, false or null"));
                        continue;
                    }
                };
                match k.as_str() {
                    "D_is_nef_nonample" => assumptions.d_is_nef_nonample = b.unwrap_or(false),
                    "H_is_ample" => assumptions.h_is_ample = b,
                    "X_is_calabi_yau" => assumptions.x_is_calabi_yau = b.unwrap_or(false),
                    _ => errs.push(format!("assumptions: unknown key {k:?}")),
                }
            }
        }
        Some(None) => errs.push("assumptions: expected an object".into()),
        None => {}
    }

    if !errs.is_empty() {
        return Err(Error::Parse(errs.join("\n")));
    }
    let form = IntersectionForm::new(rank, entries)?;
    Ok(InputDocument { form, c2: LinearClass::new(c2.expect("checked")), divisors, assumptions })
}

fn num_or_string(q: &Rat) -> Value {
    match (q.is_integer(), i64::try_from(q.numer())) {
        (true, Ok(i)) => Value::from(i),
        _ => Value::String(fmt_rat(q)),
    }
}

#[derive(Serialize)]
struct InputOut {
    rank: usize,
    intersection: Vec<Value>,
    c2: Vec<Value>,
    divisors: BTreeMap<String, Vec<Value>>,
    assumptions: AssumptionsJson,
}

/// Canonical JSON for an input document. Zero tensor entries are dropped.
pub fn serialize_input(doc: &InputDocument) -> String {
    let out = InputOut {
        rank: doc.rank(),
        intersection: doc
            .form
            .entries()
            .iter()
            .map(|(&(i, j, k), v)| serde_json::json!([i, j, k, num_or_string(&Rat::from_integer(v.clone()))]))
            .collect(),
        c2: doc.c2.coords.iter().map(num_or_string).collect(),
        divisors: doc
            .divisors
            .iter()
            .map(|(k, d)| (k.clone(), d.iter().map(|q| Value::String(fmt_rat(q))).collect()))
            .collect(),
        assumptions: (&doc.assumptions).into(),
    };
    serde_json::to_string_pretty(&out).expect("serializable")
}
