//! The decision pipeline. Each rule's hypotheses are checked exactly and
//! recorded as trace entries that `replay` can re-evaluate from the input
//! data and the named witnesses alone.

mod checks;

pub use checks::eval_check;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cubicchase::{
    chase, inflection_test, residual_on_tangent, tangent_directions, ternary_singular_point,
    ChasePoint, DEFAULT_BUDGET, DEFAULT_DEPTH,
};
use crate::cubicfactor::{expand_cubic, factor_over_q, FactorShape};
use crate::error::{check_dim, Error, Result};
use crate::exactmath::{
    basis_vec, for_each_of_height, height, int, is_parallel, is_perfect_square, is_zero_vec,
    primitive, rational_roots_cubic, scale_vec, add_vec, Rat,
};
use crate::nsring::{
    numerical_dimension, square_class, validate_input, Asserted, Divisor, IntersectionForm,
    LinearClass,
};
use crate::quadpoints::{
    radical, sample_points, smooth_isotropic_vector, IsotropyVerdict, LinearForm,
    DEFAULT_HEIGHT_BOUND,
};

pub const SCHEMA_VERSION: u32 = 1;

pub const DISCLAIMER: &str = "Conditional on the asserted nefness and non-ampleness of D, the asserted \
ampleness of H and the asserted Calabi-Yau hypothesis; none of these is decided from intersection data.";

pub const IRREDUCIBILITY_CAVEAT: &str = "Irreducibility of the null cone is decided over Q only; \
a cubic irreducible over Q may still split over C.";

/// Points sampled on a residual quadric before picking the lowest one.
const SAMPLE_COUNT: usize = 8;

/// User assertions, echoed into every certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Assumptions {
    pub d_is_nef_nonample: bool,
    pub h_is_ample: Option<bool>,
    pub x_is_calabi_yau: bool,
}

impl Default for Assumptions {
    fn default() -> Self {
        Assumptions { d_is_nef_nonample: true, h_is_ample: None, x_is_calabi_yau: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub depth: u32,
    pub budget: u32,
    pub max_height: u64,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { depth: DEFAULT_DEPTH, budget: DEFAULT_BUDGET, max_height: DEFAULT_HEIGHT_BOUND, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Certified,
    Inconclusive,
    InputInconsistent,
}

impl Conclusion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Conclusion::Certified => "Certified",
            Conclusion::Inconclusive => "Inconclusive",
            Conclusion::InputInconsistent => "InputInconsistent",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "Certified" => Ok(Conclusion::Certified),
            "Inconclusive" => Ok(Conclusion::Inconclusive),
            "InputInconsistent" => Ok(Conclusion::InputInconsistent),
            _ => Err(Error::Parse(format!("unknown conclusion {s:?}"))),
        }
    }

    /// Process exit code: 0, 1 or 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Conclusion::Certified => 0,
            Conclusion::Inconclusive => 1,
            Conclusion::InputInconsistent => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    NefpsefContrapositive,
    PropC2Nu1,
    PropC2Nonzero,
    ThmMainReducible,
    ThmMainIrreducible,
    CorIrreducibleB4,
    PropB2Three,
    PropB2TwoNullRational,
    PropB2TwoDoubleRoot,
    None,
}

const RULE_NAMES: [(Rule, &str); 10] = [
    (Rule::NefpsefContrapositive, "nefpsef_contrapositive"),
    (Rule::PropC2Nu1, "prop_c2_nu1"),
    (Rule::PropC2Nonzero, "prop_c2_nonzero"),
    (Rule::ThmMainReducible, "thm_main_reducible"),
    (Rule::ThmMainIrreducible, "thm_main_irreducible"),
    (Rule::CorIrreducibleB4, "cor_irreducible_b4"),
    (Rule::PropB2Three, "prop_b2_3"),
    (Rule::PropB2TwoNullRational, "prop_b2_2_null_rational"),
    (Rule::PropB2TwoDoubleRoot, "prop_b2_2_double_root"),
    (Rule::None, "none"),
];

impl Rule {
    pub fn as_str(&self) -> &'static str {
        RULE_NAMES.iter().find(|(r, _)| r == self).unwrap().1
    }

    pub fn parse(s: &str) -> Result<Self> {
        RULE_NAMES
            .iter()
            .find(|(_, n)| *n == s)
            .map(|(r, _)| *r)
            .ok_or_else(|| Error::Parse(format!("unknown rule {s:?}")))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub check: String,
    pub value: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub schema_version: u32,
    pub conclusion: Conclusion,
    pub rule: Rule,
    pub witnesses: BTreeMap<String, Vec<Rat>>,
    pub trace: Vec<TraceEntry>,
    pub warnings: Vec<String>,
    pub assumptions: Assumptions,
    pub caveats: Vec<String>,
}

/// Everything the pipeline reads.
#[derive(Clone, Debug)]
pub struct Problem {
    pub form: IntersectionForm,
    pub c2: LinearClass,
    pub d: Divisor,
    pub h: Option<Divisor>,
    pub assumptions: Assumptions,
}

struct Builder<'a> {
    p: &'a Problem,
    witnesses: BTreeMap<String, Vec<Rat>>,
    trace: Vec<TraceEntry>,
    warnings: Vec<String>,
    caveats: Vec<String>,
}

impl Builder<'_> {
    fn witness(&mut self, name: &str, v: &[Rat]) {
        self.witnesses.insert(name.to_string(), v.to_vec());
    }

    fn record(&mut self, check: &str) -> Result<Rat> {
        let v = eval_check(&self.p.form, &self.p.c2, &self.witnesses, check)?;
        self.trace.push(TraceEntry { check: check.to_string(), value: v.clone() });
        Ok(v)
    }

    fn finish(self, conclusion: Conclusion, rule: Rule) -> Certificate {
        let mut caveats = vec![DISCLAIMER.to_string()];
        caveats.extend(self.caveats);
        Certificate {
            schema_version: SCHEMA_VERSION,
            conclusion,
            rule,
            witnesses: self.witnesses,
            trace: self.trace,
            warnings: self.warnings,
            assumptions: self.p.assumptions,
            caveats,
        }
    }
}

/// Run the pipeline. Rules are tried in a fixed order and the first whose
/// hypotheses hold fires.
pub fn certify(p: &Problem, opts: &Options) -> Result<Certificate> {
    let n = p.form.rank();
    check_dim(n, p.d.len())?;
    check_dim(n, p.c2.coords.len())?;
    if let Some(h) = &p.h {
        check_dim(n, h.len())?;
    }
    if is_zero_vec(&p.d) {
        return Err(Error::Precondition("D must be nonzero".into()));
    }
    let mut b = Builder {
        p,
        witnesses: BTreeMap::new(),
        trace: Vec::new(),
        warnings: Vec::new(),
        caveats: Vec::new(),
    };
    b.witness("D", &p.d);
    if let Some(h) = &p.h {
        b.witness("H", h);
    }

    // (0) sanity warnings
    let mut asserted = Vec::new();
    if p.assumptions.d_is_nef_nonample {
        asserted.push((&p.d, Asserted::Nef));
    }
    if let (Some(h), Some(true)) = (&p.h, p.assumptions.h_is_ample) {
        asserted.push((h, Asserted::Ample));
    }
    b.warnings = validate_input(&p.form, &p.c2, &asserted);
    if !p.assumptions.d_is_nef_nonample || !p.assumptions.x_is_calabi_yau {
        b.warnings.push("every rule needs D asserted nef non-ample on an asserted Calabi-Yau threefold".into());
        return Ok(b.finish(Conclusion::Inconclusive, Rule::None));
    }

    // (1) off the null cone
    if !b.record("cube(D)")?.is_zero() {
        return Ok(b.finish(Conclusion::Certified, Rule::NefpsefContrapositive));
    }
    // (2) numerical dimension
    let nu = b.record("nu(D)")?;
    if nu.is_zero() {
        return Ok(b.finish(Conclusion::InputInconsistent, Rule::None));
    }
    if nu.is_one() {
        return Ok(b.finish(Conclusion::Certified, Rule::PropC2Nu1));
    }
    // (3) c2 pairing
    if !b.record("c2(D)")?.is_zero() {
        return Ok(b.finish(Conclusion::Certified, Rule::PropC2Nonzero));
    }
    b.record("rank()")?;
    match n {
        1 => Ok(b.finish(Conclusion::InputInconsistent, Rule::None)),
        2 => picard_two(b),
        3 => picard_three(b, opts),
        4 => {
            if b.record("irreducible()")?.is_zero() {
                return Ok(b.finish(Conclusion::Inconclusive, Rule::None));
            }
            attach_chase(&mut b, opts);
            b.caveats.push(IRREDUCIBILITY_CAVEAT.into());
            Ok(b.finish(Conclusion::Certified, Rule::CorIrreducibleB4))
        }
        _ => large_picard(b, opts),
    }
}

fn attach_chase(b: &mut Builder<'_>, opts: &Options) {
    let p = b.p;
    if let Ok(t) = chase(&p.form, &p.c2, &p.d, opts.depth, opts.budget) {
        if let Some(e) = t.witness {
            b.witness("E", &e);
            // both evaluate on valid witnesses
            let _ = b.record("cube(E)");
            let _ = b.record("c2(E)");
        } else {
            b.warnings.push("chase found no point E with c2·E != 0 within its budget".into());
        }
    }
}

fn large_picard(mut b: Builder<'_>, opts: &Options) -> Result<Certificate> {
    let p = b.p;
    let fac = factor_over_q(&expand_cubic(&p.form), opts.seed)?;
    if b.record("irreducible()")?.is_one() {
        attach_chase(&mut b, opts);
        b.caveats.push(IRREDUCIBILITY_CAVEAT.into());
        return Ok(b.finish(Conclusion::Certified, Rule::ThmMainIrreducible));
    }
    b.record("linear_factors()")?;
    let FactorShape::LinearTimesQuadric(l, _) = &fac.shape else {
        // a product of hyperplanes cannot bound the compact section of the nef cone
        for (k, l) in fac.linear_factors().into_iter().enumerate() {
            let name = format!("L{}", k + 1);
            if !b.witnesses.contains_key(&name) && !b.witnesses.values().any(|v| v == &l.coords) {
                b.witness(&name, &l.coords);
                b.record(&format!("divides({name})"))?;
            }
        }
        return Ok(b.finish(Conclusion::InputInconsistent, Rule::None));
    };
    b.witness("L", &l.coords);
    b.record("divides(L)")?;
    if b.record("residual_definite(L)")?.is_one() {
        return Ok(b.finish(Conclusion::InputInconsistent, Rule::None));
    }
    let q = checks::residual_quadric(&p.form, &l.coords)?.expect("verified factor");
    // a singular point of the quadric with numerical dimension one
    for r in radical(&q) {
        if numerical_dimension(&p.form, &r)? == 1 {
            b.witness("P", &r);
            b.record("cube(P)")?;
            b.record("nu(P)")?;
            return Ok(b.finish(Conclusion::Certified, Rule::PropC2Nu1));
        }
    }
    let v = match smooth_isotropic_vector(&q, opts.max_height) {
        Ok(IsotropyVerdict::Isotropic(v)) => v,
        Ok(_) | Err(_) => {
            b.warnings.push("no rational smooth point found on the residual quadric".into());
            return Ok(b.finish(Conclusion::Inconclusive, Rule::None));
        }
    };
    let avoid = [LinearForm::new(l.coords.clone()), LinearForm::new(p.c2.coords.clone())];
    let mut cands = sample_points(&q, &v, SAMPLE_COUNT, &avoid).unwrap_or_default();
    if avoid.iter().all(|a| !a.eval(&v).map(|x| x.is_zero()).unwrap_or(true)) {
        cands.push(v);
    }
    let Some(best) = lowest(cands) else {
        b.warnings.push("every sampled point of the residual quadric meets L = 0 or c2 = 0".into());
        return Ok(b.finish(Conclusion::Inconclusive, Rule::None));
    };
    b.witness("P", &best);
    b.record("cube(P)")?;
    b.record("dot(L,P)")?;
    b.record("c2(P)")?;
    Ok(b.finish(Conclusion::Certified, Rule::ThmMainReducible))
}

// smallest height, first among equals
fn lowest(cands: Vec<Vec<Rat>>) -> Option<Vec<Rat>> {
    let mut best: Option<Vec<Rat>> = None;
    for c in cands {
        if best.as_ref().is_none_or(|b| height(&c) < height(b)) {
            best = Some(c);
        }
    }
    best
}

fn picard_three(mut b: Builder<'_>, opts: &Options) -> Result<Certificate> {
    let p = b.p;
    if b.record("irreducible()")?.is_zero() {
        return Ok(b.finish(Conclusion::Inconclusive, Rule::None));
    }
    b.caveats.push(IRREDUCIBILITY_CAVEAT.into());
    if let Some(s) = ternary_singular_point(&p.form)? {
        // project the cubic from its rational singular point
        b.witness("P", &s);
        b.record("singular(P)")?;
        let e = through_singular_point(&p.form, &p.c2, &s, opts.budget as usize)?;
        let Some(e) = e else {
            b.warnings.push("no point with c2·E != 0 found through the singular point".into());
            return Ok(b.finish(Conclusion::Inconclusive, Rule::None));
        };
        b.witness("E", &e);
        b.record("cube(E)")?;
        b.record("c2(E)")?;
        return Ok(b.finish(Conclusion::Certified, Rule::PropB2Three));
    }
    let ell = square_class(&p.form, &p.d)?;
    let x = tangent_directions(&ell, &p.d, 1).into_iter().next().expect("tangent line exists");
    let ChasePoint::Point(e) = residual_on_tangent(&p.form, &p.d, &x)? else {
        return Ok(b.finish(Conclusion::Inconclusive, Rule::None));
    };
    b.witness("E", &e);
    b.record("cube(E)")?;
    b.record("triple(D,D,E)")?;
    let t = inflection_test(&p.form, &e)?;
    let g = if t.is_flex { "F" } else { "G" };
    b.witness(g, &t.witness);
    b.record(&format!("triple(E,E,{g})"))?;
    b.record(&format!("triple(E,{g},{g})"))?;
    if t.is_flex {
        b.warnings.push("E is a flex of the plane cubic; the obstruction divisor F is recorded".into());
        return Ok(b.finish(Conclusion::Inconclusive, Rule::None));
    }
    Ok(b.finish(Conclusion::Certified, Rule::PropB2Three))
}

/// A point `E` on the cubic with `c2·E != 0`, on a line through the
/// singular point `s`.
fn through_singular_point(
    form: &IntersectionForm,
    c2: &LinearClass,
    s: &[Rat],
    budget: usize,
) -> Result<Option<Vec<Rat>>> {
    let n = form.rank();
    let mut tried = 0usize;
    let mut found = None;
    let mut h = 1;
    while found.is_none() && tried < budget {
        let mut err = None;
        for_each_of_height(n, h, &mut |xi| {
            let x: Vec<Rat> = xi.iter().map(|&v| int(v)).collect();
            let lead_pos = x.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_positive());
            if !lead_pos || primitive(&x) != x || is_parallel(&x, s) {
                return true;
            }
            tried += 1;
            match residual_on_tangent(form, s, &x) {
                Ok(ChasePoint::Point(e)) if !is_parallel(&e, s) => match c2.eval(&e) {
                    Ok(v) if !v.is_zero() => {
                        found = Some(e);
                        return false;
                    }
                    Ok(_) => {}
                    Err(e) => err = Some(e),
                },
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
            err.is_none() && tried < budget
        });
        if let Some(e) = err {
            return Err(e);
        }
        h += 1;
    }
    Ok(found)
}

fn picard_two(mut b: Builder<'_>) -> Result<Certificate> {
    let p = b.p;
    let d = &p.d;
    let e = (0..2).map(|i| basis_vec(2, i)).find(|e| !is_parallel(e, d)).expect("D is nonzero");
    b.witness("E", &e);
    let (a, bb, c) = checks::b2_coeffs(&p.form, &e, d)?;
    // F(tE + D) = t (a t^2 + 3b t + 3c)
    if !a.is_zero() && (int(3) * &bb * &bb == int(4) * &a * &c) {
        let dp = add_vec(&scale_vec(&e, &(int(-3) * &bb)), &scale_vec(d, &(int(2) * &a)));
        b.witness("D'", &dp);
        b.record("b2_double_root_gap(E,D)")?;
        b.record("triple(D',D',D)")?;
        b.record("triple(D',D',E)")?;
        b.record("nu(D')")?;
        return Ok(b.finish(Conclusion::Certified, Rule::PropB2TwoDoubleRoot));
    }
    let disc = b.record("b2_disc(E,D)")?;
    if a.is_zero() || is_perfect_square(&disc).is_some() {
        if !a.is_zero() {
            b.record("b2_disc_is_square(E,D)")?;
        }
        let roots = rational_roots_cubic(&a, &(int(3) * &bb), &(int(3) * &c), &Rat::zero())?;
        let mut rays: Vec<Vec<Rat>> = roots
            .into_iter()
            .filter(|(t, _)| !t.is_zero())
            .map(|(t, _)| primitive(&add_vec(&scale_vec(&e, &t), d)))
            .collect();
        if a.is_zero() {
            rays.push(e.clone());
        }
        let good: Vec<Vec<Rat>> = rays
            .into_iter()
            .filter(|r| !is_parallel(r, d) && !p.c2.eval(r).map(|v| v.is_zero()).unwrap_or(true))
            .collect();
        if let Some(r) = lowest(good) {
            b.witness("D'", &r);
            b.record("cube(D')")?;
            b.record("c2(D')")?;
            return Ok(b.finish(Conclusion::Certified, Rule::PropB2TwoNullRational));
        }
    }
    Ok(b.finish(Conclusion::Inconclusive, Rule::None))
}

/// A trace entry whose recorded value differs from its re-evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: String,
    pub recorded: Rat,
    pub replayed: Option<Rat>,
}

/// Re-evaluate every trace entry from the inputs and the witnesses.
pub fn replay(form: &IntersectionForm, c2: &LinearClass, cert: &Certificate) -> Vec<Mismatch> {
    cert.trace
        .iter()
        .filter_map(|t| {
            let got = eval_check(form, c2, &cert.witnesses, &t.check).ok();
            (got.as_ref() != Some(&t.value)).then(|| Mismatch {
                check: t.check.clone(),
                recorded: t.value.clone(),
                replayed: got,
            })
        })
        .collect()
}
