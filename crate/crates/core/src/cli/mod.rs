//! Command-line front end. Every subcommand writes deterministic output so
//! that repeated runs with the same flags are byte-identical.

pub mod document;
mod fixtures;
pub mod input;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use document::{certificate_from_json, certificate_from_text, certificate_to_json, certificate_to_text};
pub use fixtures::{fixtures, Fixture};
pub use input::{parse_input, serialize_input, InputDocument};

use crate::certify::{certify, replay, Certificate, Options, Problem};
use crate::cubicchase::{chase, third_point_on_line, residual_on_tangent, ChasePoint, DEFAULT_BUDGET, DEFAULT_DEPTH};
use crate::cubicfactor::{expand_cubic, factor_over_q, FactorShape};
use crate::error::{Error, Result};
use crate::exactmath::{fmt_rat, parse_rat, Mat, Rat};
use crate::nsring::{cube, key_lemma_flags, numerical_dimension, square_class, wilson_line_point, wilson_t0};
use crate::quadpoints::{isotropic_vector, IsotropyVerdict, QuadraticForm, DEFAULT_HEIGHT_BOUND};

#[derive(Parser)]
#[command(name = "nefcert", version, about = "Exact certificates for rational curves from Calabi-Yau intersection data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run the decision pipeline on one divisor and print a certificate.
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        ample: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u32,
        #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
        max_height: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Re-evaluate every trace entry of a certificate against an input.
    Replay {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Numerical dimension, c2 pairings, null-cone factorization, and the
    /// Wilson parameter when an ample class is given.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        ample: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Factor the null-cone cubic over Q.
    Factor {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rational point on a quadric given by a symmetric matrix, rows
    /// separated by `;`.
    Qpoint {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
        max_height: u64,
    },
    /// Tangent-residual chase from a point of the null cone.
    Chase {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u32,
    },
    /// Third intersection of a line with the null cone. P and Q are divisor
    /// names or coordinate lists like `1,-1,0`.
    Thirdpoint {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Treat Q as a tangent direction at the point P.
        #[arg(long)]
        tangent: bool,
    },
    /// List the bundled fixtures, or print one.
    Fixtures {
        #[arg(long)]
        name: Option<String>,
        /// Print the expected certificate instead of the input.
        #[arg(long)]
        expected: bool,
    },
}

/// Run with process arguments, writing to stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run_with(args, &mut out, &mut err)
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load(path: &PathBuf) -> Result<InputDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_input(&text)
}

fn strs(v: &[Rat]) -> Value {
    Value::from(v.iter().map(fmt_rat).collect::<Vec<_>>())
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))
        .map_err(|e| Error::Invalid(e.to_string()))
}

/// Coordinates like `1,-1/2,0` or `1 -1/2 0`.
fn parse_coords(s: &str) -> Result<Vec<Rat>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_rat)
        .collect()
}

fn resolve(doc: &InputDocument, s: &str) -> Result<Vec<Rat>> {
    if let Some(d) = doc.divisors.get(s) {
        return Ok(d.coords.clone());
    }
    let v = parse_coords(s).map_err(|_| Error::Invalid(format!("{s:?} is neither a divisor name nor a coordinate list")))?;
    crate::error::check_dim(doc.rank(), v.len())?;
    Ok(v)
}

/// The certificate for a named divisor of an input document.
pub fn certify_document(doc: &InputDocument, divisor: &str, ample: Option<&str>, opts: &Options) -> Result<Certificate> {
    let problem = Problem {
        form: doc.form.clone(),
        c2: doc.c2.clone(),
        d: doc.divisor(divisor)?.clone(),
        h: ample.map(|a| doc.divisor(a).cloned()).transpose()?,
        assumptions: doc.assumptions,
    };
    certify(&problem, opts)
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let write = |out: &mut dyn Write, s: &str| out.write_all(s.as_bytes()).map_err(|e| Error::Invalid(e.to_string()));
    match cmd {
        Command::Certify { input, divisor, ample, depth, budget, max_height, seed, format } => {
            let doc = load(&input)?;
            let opts = Options { depth, budget, max_height, seed };
            let c = certify_document(&doc, &divisor, ample.as_deref(), &opts)?;
            match format {
                Format::Json => write(out, &certificate_to_json(&c))?,
                Format::Text => write(out, &certificate_to_text(&c))?,
            }
            Ok(c.conclusion.exit_code())
        }
        Command::Replay { input, certificate } => {
            let doc = load(&input)?;
            let text = std::fs::read_to_string(&certificate)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", certificate.display())))?;
            let c = if text.trim_start().starts_with('{') {
                certificate_from_json(&text)?
            } else {
                certificate_from_text(&text)?
            };
            let bad = replay(&doc.form, &doc.c2, &c);
            for m in &bad {
                let got = m.replayed.as_ref().map_or("error".to_string(), fmt_rat);
                write(out, &format!("mismatch {}: recorded {}, replayed {got}\n", m.check, fmt_rat(&m.recorded)))?;
            }
            write(out, &format!("{} of {} trace entries replayed exactly\n", c.trace.len() - bad.len(), c.trace.len()))?;
            Ok(if bad.is_empty() { 0 } else { 2 })
        }
        Command::Analyze { input, divisor, ample, seed } => {
            let doc = load(&input)?;
            emit(out, &analyze(&doc, &divisor, ample.as_deref(), seed)?)?;
            Ok(0)
        }
        Command::Factor { input, seed } => {
            let doc = load(&input)?;
            emit(out, &factor_json(&doc, seed)?)?;
            Ok(0)
        }
        Command::Qpoint { form, max_height } => {
            let rows = form
                .split(';')
                .filter(|r| !r.trim().is_empty())
                .map(parse_coords)
                .collect::<Result<Vec<_>>>()?;
            if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
                return Err(Error::Invalid("--form must be a square matrix".into()));
            }
            let q = QuadraticForm::new(Mat::from_rows(&rows))?;
            let v = match isotropic_vector(&q, max_height)? {
                IsotropyVerdict::Isotropic(w) => json!({"verdict": "isotropic", "witness": strs(&w), "value": fmt_rat(&q.eval(&w)?)}),
                IsotropyVerdict::Anisotropic(place) => json!({"verdict": "anisotropic", "place": place.to_string()}),
                IsotropyVerdict::Degenerate(rad) => {
                    json!({"verdict": "degenerate", "radical": rad.iter().map(|r| strs(r)).collect::<Vec<_>>()})
                }
            };
            emit(out, &v)?;
            Ok(0)
        }
        Command::Chase { input, divisor, depth, budget } => {
            let doc = load(&input)?;
            let t = chase(&doc.form, &doc.c2, doc.divisor(&divisor)?, depth, budget)?;
            let v = json!({
                "visited": t.visited.iter().map(|p| strs(p)).collect::<Vec<_>>(),
                "edges": t.edges.iter().map(|e| json!({"from": strs(&e.from), "direction": strs(&e.direction), "to": strs(&e.to)})).collect::<Vec<_>>(),
                "degeneracies": t.degeneracies.iter().map(|d| json!({"kind": format!("{:?}", d.kind), "point": strs(&d.point)})).collect::<Vec<_>>(),
                "witness": t.witness.as_deref().map(strs),
                "exhausted": t.exhausted,
            });
            emit(out, &v)?;
            Ok(0)
        }
        Command::Thirdpoint { input, p, q, tangent } => {
            let doc = load(&input)?;
            let (p, q) = (resolve(&doc, &p)?, resolve(&doc, &q)?);
            let r = if tangent {
                residual_on_tangent(&doc.form, &p, &q)?
            } else {
                third_point_on_line(&doc.form, &p, &q)?
            };
            let v = match r {
                ChasePoint::Point(x) => json!({"result": "point", "point": strs(&x), "cube": fmt_rat(&cube(&doc.form, &x)?)}),
                ChasePoint::LineContained => json!({"result": "line_contained"}),
            };
            emit(out, &v)?;
            Ok(0)
        }
        Command::Fixtures { name, expected } => {
            match name {
                None => {
                    for f in fixtures() {
                        write(out, &format!("{}\n", f.name))?;
                    }
                }
                Some(n) => {
                    let f = fixtures()
                        .into_iter()
                        .find(|f| f.name == n)
                        .ok_or_else(|| Error::Invalid(format!("no fixture named {n:?}")))?;
                    write(out, if expected { f.expected } else { f.input })?;
                }
            }
            Ok(0)
        }
    }
}

fn factor_json(doc: &InputDocument, seed: u64) -> Result<Value> {
    let f = expand_cubic(&doc.form);
    if f.is_zero() {
        return Ok(json!({"cubic": "0", "shape": "zero"}));
    }
    let fac = factor_over_q(&f, seed)?;
    let quadric = match &fac.shape {
        FactorShape::LinearTimesQuadric(_, q) => Some(q.to_poly().to_string()),
        _ => None,
    };
    Ok(json!({
        "cubic": f.poly().to_string(),
        "shape": fac.name(),
        "scalar": fmt_rat(&fac.scalar),
        "linear_factors": fac.linear_factors().iter().map(|l| strs(&l.coords)).collect::<Vec<_>>(),
        "quadric": quadric,
    }))
}

/// Trace-only analysis of one divisor; never a certification.
pub fn analyze(doc: &InputDocument, divisor: &str, ample: Option<&str>, seed: u64) -> Result<Value> {
    let d = doc.divisor(divisor)?;
    let nu = numerical_dimension(&doc.form, d)?;
    let pairings: serde_json::Map<String, Value> = doc
        .divisors
        .iter()
        .map(|(k, v)| Ok((k.clone(), Value::from(fmt_rat(&doc.c2.eval(v)?)))))
        .collect::<Result<_>>()?;
    let mut v = json!({
        "divisor": divisor,
        "coords": strs(d),
        "cube": fmt_rat(&cube(&doc.form, d)?),
        "square_class": strs(&square_class(&doc.form, d)?.coords),
        "nu": nu,
        "c2_pairings": pairings,
        "null_cone": factor_json(doc, seed)?,
    });
    if let Some(a) = ample {
        let h = doc.divisor(a)?;
        v["wilson"] = match wilson_t0(&doc.form, h, d) {
            Ok(t0) => {
                let n = wilson_line_point(h, d, &t0);
                let (a, b, c) = key_lemma_flags(&doc.form, &n, h)?;
                json!({
                    "t0": fmt_rat(&t0),
                    "N": strs(&n),
                    "N_cube": fmt_rat(&cube(&doc.form, &n)?),
                    "key_lemma": {"N3_positive": a, "N2H_positive": b, "NH2_positive": c},
                })
            }
            Err(e) => json!({"skipped": e.to_string()}),
        };
        v["wilson"]["ample"] = Value::from(a);
    }
    Ok(v)
}
