//! Named exact checks. Both the pipeline and `replay` evaluate trace
//! entries through `eval_check`, so a recorded value is by construction the
//! value the check computes from the inputs and the witnesses.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cubicfactor::{expand_cubic, factor_over_q};
use crate::error::{Error, Result};
use crate::exactmath::{basis_vec, dot, int, is_perfect_square, Poly, Rat};
use crate::nsring::{cube, numerical_dimension, square_class, triple, IntersectionForm, LinearClass};
use crate::quadpoints::{diagonalize, QuadraticForm};

/// Coefficients `(E³, E²·D, E·D²)` of the binary null-cone cubic.
pub(crate) fn b2_coeffs(form: &IntersectionForm, e: &[Rat], d: &[Rat]) -> Result<(Rat, Rat, Rat)> {
    Ok((cube(form, e)?, triple(form, e, e, d)?, triple(form, e, d, d)?))
}

/// `9 (E²·D)² − 12 E³ (E·D²)`, the discriminant of the quadratic factor.
pub(crate) fn b2_disc(form: &IntersectionForm, e: &[Rat], d: &[Rat]) -> Result<Rat> {
    let (a, b, c) = b2_coeffs(form, e, d)?;
    Ok(int(9) * &b * &b - int(12) * a * c)
}

fn flag(b: bool) -> Rat {
    if b {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// The quadric `F / L`, if `L` divides the null-cone cubic.
pub(crate) fn residual_quadric(form: &IntersectionForm, l: &[Rat]) -> Result<Option<QuadraticForm>> {
    let f = expand_cubic(form);
    match f.poly().exact_divide(&Poly::linear(l))? {
        Some(q) => Ok(Some(QuadraticForm::from_poly(&q)?)),
        None => Ok(None),
    }
}

pub(crate) fn is_definite(q: &QuadraticForm) -> bool {
    let (_, d) = diagonalize(q);
    d.iter().all(Signed::is_positive) || d.iter().all(Signed::is_negative)
}

fn resolve<'a>(
    name: &str,
    witnesses: &'a BTreeMap<String, Vec<Rat>>,
    n: usize,
    scratch: &'a mut Vec<Vec<Rat>>,
) -> Result<&'a [Rat]> {
    if let Some(v) = witnesses.get(name) {
        return Ok(v);
    }
    if let Some(i) = name.strip_prefix('e').and_then(|s| s.parse::<usize>().ok()) {
        if i < n {
            scratch.push(basis_vec(n, i));
            return Ok(scratch.last().unwrap());
        }
    }
    Err(Error::Invalid(format!("unknown witness {name:?}")))
}

/// Evaluate a check such as `triple(E,G,G)` against the inputs.
pub fn eval_check(
    form: &IntersectionForm,
    c2: &LinearClass,
    witnesses: &BTreeMap<String, Vec<Rat>>,
    check: &str,
) -> Result<Rat> {
    let bad = || Error::Parse(format!("malformed check {check:?}"));
    let (name, rest) = check.split_once('(').ok_or_else(bad)?;
    let args = rest.strip_suffix(')').ok_or_else(bad)?;
    let args: Vec<&str> = if args.trim().is_empty() { vec![] } else { args.split(',').map(str::trim).collect() };
    let n = form.rank();
    let mut vals = Vec::new();
    for a in &args {
        let mut scratch = Vec::new();
        vals.push(resolve(a, witnesses, n, &mut scratch)?.to_vec());
    }
    let arity = |k: usize| if vals.len() == k { Ok(()) } else { Err(bad()) };
    let v = match name {
        "rank" => {
            arity(0)?;
            Rat::from_integer(BigInt::from(n))
        }
        "cube" => {
            arity(1)?;
            cube(form, &vals[0])?
        }
        "triple" => {
            arity(3)?;
            triple(form, &vals[0], &vals[1], &vals[2])?
        }
        "c2" => {
            arity(1)?;
            c2.eval(&vals[0])?
        }
        "nu" => {
            arity(1)?;
            int(numerical_dimension(form, &vals[0])? as i64)
        }
        "dot" => {
            arity(2)?;
            crate::error::check_dim(vals[0].len(), vals[1].len())?;
            dot(&vals[0], &vals[1])
        }
        "singular" => {
            arity(1)?;
            flag(square_class(form, &vals[0])?.is_zero())
        }
        "divides" => {
            arity(1)?;
            flag(residual_quadric(form, &vals[0])?.is_some())
        }
        "residual_definite" => {
            arity(1)?;
            let q = residual_quadric(form, &vals[0])?
                .ok_or_else(|| Error::Precondition("linear form does not divide the cubic".into()))?;
            flag(is_definite(&q))
        }
        "irreducible" => {
            arity(0)?;
            flag(factor_over_q(&expand_cubic(form), 0)?.is_irreducible())
        }
        "linear_factors" => {
            arity(0)?;
            let f = factor_over_q(&expand_cubic(form), 0)?;
            int(f.linear_factors().len() as i64)
        }
        "b2_disc" => {
            arity(2)?;
            b2_disc(form, &vals[0], &vals[1])?
        }
        "b2_disc_is_square" => {
            arity(2)?;
            flag(is_perfect_square(&b2_disc(form, &vals[0], &vals[1])?).is_some())
        }
        "b2_double_root_gap" => {
            arity(2)?;
            let (a, b, c) = b2_coeffs(form, &vals[0], &vals[1])?;
            int(3) * &b * &b - int(4) * a * c
        }
        _ => return Err(Error::Parse(format!("unknown check {name:?}"))),
    };
    Ok(v)
}
