//! Certificate documents in JSON and in a line-based text format. Both
//! carry the same fields and parse back to the same `Certificate`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::certify::{Assumptions, Certificate, Conclusion, Rule, TraceEntry};
use crate::error::{Error, Result};
use crate::exactmath::{fmt_rat, parse_rat, Rat};

#[derive(Serialize, Deserialize)]
#[allow(non_snake_case)]
pub(crate) struct AssumptionsJson {
    D_is_nef_nonample: bool,
    H_is_ample: Option<bool>,
    X_is_calabi_yau: bool,
}

impl From<&Assumptions> for AssumptionsJson {
    fn from(a: &Assumptions) -> Self {
        AssumptionsJson {
            D_is_nef_nonample: a.d_is_nef_nonample,
            H_is_ample: a.h_is_ample,
            X_is_calabi_yau: a.x_is_calabi_yau,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    check: String,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateJson {
    schema_version: u32,
    conclusion: String,
    rule: String,
    witnesses: BTreeMap<String, Vec<String>>,
    trace: Vec<TraceJson>,
    warnings: Vec<String>,
    assumptions: AssumptionsJson,
    caveats: Vec<String>,
}

fn rats(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| parse_rat(s)).collect()
}

pub fn certificate_to_json(c: &Certificate) -> String {
    let doc = CertificateJson {
        schema_version: c.schema_version,
        conclusion: c.conclusion.as_str().into(),
        rule: c.rule.as_str().into(),
        witnesses: c.witnesses.iter().map(|(k, v)| (k.clone(), v.iter().map(fmt_rat).collect())).collect(),
        trace: c.trace.iter().map(|t| TraceJson { check: t.check.clone(), value: fmt_rat(&t.value) }).collect(),
        warnings: c.warnings.clone(),
        assumptions: (&c.assumptions).into(),
        caveats: c.caveats.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn certificate_from_json(text: &str) -> Result<Certificate> {
    let d: CertificateJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut witnesses = BTreeMap::new();
    for (k, v) in &d.witnesses {
        witnesses.insert(k.clone(), rats(v)?);
    }
    let trace = d
        .trace
        .iter()
        .map(|t| Ok(TraceEntry { check: t.check.clone(), value: parse_rat(&t.value)? }))
        .collect::<Result<_>>()?;
    Ok(Certificate {
        schema_version: d.schema_version,
        conclusion: Conclusion::parse(&d.conclusion)?,
        rule: Rule::parse(&d.rule)?,
        witnesses,
        trace,
        warnings: d.warnings,
        assumptions: Assumptions {
            d_is_nef_nonample: d.assumptions.D_is_nef_nonample,
            h_is_ample: d.assumptions.H_is_ample,
            x_is_calabi_yau: d.assumptions.X_is_calabi_yau,
        },
        caveats: d.caveats,
    })
}

fn opt_bool(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "null",
    }
}

/// One record per line: `keyword rest-of-line`.
pub fn certificate_to_text(c: &Certificate) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("schema_version {}", c.schema_version));
    line(format!("conclusion {}", c.conclusion.as_str()));
    line(format!("rule {}", c.rule));
    line(format!("assumption D_is_nef_nonample {}", c.assumptions.d_is_nef_nonample));
    line(format!("assumption H_is_ample {}", opt_bool(c.assumptions.h_is_ample)));
    line(format!("assumption X_is_calabi_yau {}", c.assumptions.x_is_calabi_yau));
    for (k, v) in &c.witnesses {
        let coords: Vec<String> = v.iter().map(fmt_rat).collect();
        line(format!("witness {k}: {}", coords.join(" ")));
    }
    for t in &c.trace {
        line(format!("trace {} = {}", t.check, fmt_rat(&t.value)));
    }
    for w in &c.warnings {
        line(format!("warning {}", w.replace('\n', " ")));
    }
    for w in &c.caveats {
        line(format!("caveat {}", w.replace('\n', " ")));
    }
    out
}

pub fn certificate_from_text(text: &str) -> Result<Certificate> {
    let mut c = Certificate {
        schema_version: 0,
        conclusion: Conclusion::Inconclusive,
        rule: Rule::None,
        witnesses: BTreeMap::new(),
        trace: Vec::new(),
        warnings: Vec::new(),
        assumptions: Assumptions { d_is_nef_nonample: false, h_is_ample: None, x_is_calabi_yau: false },
        caveats: Vec::new(),
    };
    let mut have = [false; 3];
    for (no, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let bad = |m: &str| Error::Parse(format!("line {}: {m}", no + 1));
        let (key, rest) = raw.split_once(' ').ok_or_else(|| bad("expected `keyword value`"))?;
        match key {
            "schema_version" => {
                c.schema_version = rest.trim().parse().map_err(|_| bad("bad schema version"))?;
                have[0] = true;
            }
            "conclusion" => {
                c.conclusion = Conclusion::parse(rest.trim())?;
                have[1] = true;
            }
            "rule" => {
                c.rule = Rule::parse(rest.trim())?;
                have[2] = true;
            }
            "assumption" => {
                let (k, v) = rest.split_once(' ').ok_or_else(|| bad("expected `assumption NAME VALUE`"))?;
                let v = match v.trim() {
                    "true" => Some(true),
                    "false" => Some(false),
                    "null" => None,
                    _ => return Err(bad("expected true, false or null")),
                };
                match k {
                    "D_is_nef_nonample" => c.assumptions.d_is_nef_nonample = v.unwrap_or(false),
                    "H_is_ample" => c.assumptions.h_is_ample = v,
                    "X_is_calabi_yau" => c.assumptions.x_is_calabi_yau = v.unwrap_or(false),
                    _ => return Err(bad("unknown assumption")),
                }
            }
            "witness" => {
                let (k, v) = rest.split_once(':').ok_or_else(|| bad("expected `witness NAME: coords`"))?;
                let coords = v.split_whitespace().map(parse_rat).collect::<Result<Vec<_>>>()?;
                c.witnesses.insert(k.trim().to_string(), coords);
            }
            "trace" => {
                let (k, v) = rest.rsplit_once(" = ").ok_or_else(|| bad("expected `trace CHECK = VALUE`"))?;
                c.trace.push(TraceEntry { check: k.trim().to_string(), value: parse_rat(v)? });
            }
            "warning" => c.warnings.push(rest.to_string()),
            "caveat" => c.caveats.push(rest.to_string()),
            _ => return Err(bad(&format!("unknown keyword {key:?}"))),
        }
    }
    if have.iter().any(|h| !h) {
        return Err(Error::Parse("missing schema_version, conclusion or rule".into()));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn sample() -> Certificate {
        let mut witnesses = BTreeMap::new();
        witnesses.insert("D".to_string(), vec![int(1), rat(-1, 2)]);
        witnesses.insert("D'".to_string(), vec![int(0), int(3)]);
        Certificate {
            schema_version: 1,
            conclusion: Conclusion::Certified,
            rule: Rule::PropB2TwoNullRational,
            witnesses,
            trace: vec![TraceEntry { check: "triple(D',D',D)".into(), value: rat(7, 3) }],
            warnings: vec!["Miyaoka inequality violated: c2·D = -1".into()],
            assumptions: Assumptions { d_is_nef_nonample: true, h_is_ample: None, x_is_calabi_yau: true },
            caveats: vec!["conditional".into()],
        }
    }

    #[test]
    fn both_formats_round_trip() {
        let c = sample();
        assert_eq!(certificate_from_json(&certificate_to_json(&c)).unwrap(), c);
        assert_eq!(certificate_from_text(&certificate_to_text(&c)).unwrap(), c);
    }

    #[test]
    fn text_layout() {
        let t = certificate_to_text(&sample());
        assert!(t.contains("witness D: 1 -1/2\n"));
        assert!(t.contains("trace triple(D',D',D) = 7/3\n"));
        assert!(certificate_from_text("rule nonsense\n").is_err());
    }
}
