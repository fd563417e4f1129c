//! The Néron–Severi intersection ring: divisors, the symmetric trilinear
//! intersection form, numerical dimension and the `c2` pairing.

use std::collections::BTreeMap;
use std::ops::Deref;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactmath::{basis_vec, dot, fmt_rat, is_zero_vec, scale_vec, sub_vec, Rat};

/// A divisor class with rational coordinates in a fixed lattice basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub coords: Vec<Rat>,
    pub name: Option<String>,
}

impl Divisor {
    pub fn new(coords: Vec<Rat>) -> Self {
        Divisor { coords, name: None }
    }

    pub fn named(name: impl Into<String>, coords: Vec<Rat>) -> Self {
        Divisor { coords, name: Some(name.into()) }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

impl Deref for Divisor {
    type Target = [Rat];
    fn deref(&self) -> &[Rat] {
        &self.coords
    }
}

/// A linear functional on divisor classes, such as `c2(X) . (-)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearClass {
    pub coords: Vec<Rat>,
}

impl LinearClass {
    pub fn new(coords: Vec<Rat>) -> Self {
        LinearClass { coords }
    }

    pub fn eval(&self, x: &[Rat]) -> Result<Rat> {
        check_dim(self.coords.len(), x.len())?;
        Ok(dot(&self.coords, x))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }
}

/// Symmetric trilinear form given by its values `d_ijk` on sorted index
/// triples `i <= j <= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    rank: usize,
    entries: BTreeMap<(usize, usize, usize), BigInt>,
    // every nonzero t_ijk of the full symmetric tensor, over all orderings
    full: Vec<(usize, usize, usize, Rat)>,
}

impl IntersectionForm {
    pub fn new(
        rank: usize,
        entries: impl IntoIterator<Item = ((usize, usize, usize), BigInt)>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Invalid("rank must be at least 1".into()));
        }
        let mut map = BTreeMap::new();
        for ((i, j, k), v) in entries {
            if !(i <= j && j <= k) {
                return Err(Error::Invalid(format!(
                    "indices must satisfy i ≤ j ≤ k, got [{i}, {j}, {k}]"
                )));
            }
            if k >= rank {
                return Err(Error::Invalid(format!(
                    "index out of range in [{i}, {j}, {k}] for rank {rank}"
                )));
            }
            if map.insert((i, j, k), v).is_some() {
                return Err(Error::Invalid(format!("duplicate entry [{i}, {j}, {k}]")));
            }
        }
        map.retain(|_, v| !v.is_zero());
        let mut full = Vec::new();
        for (&(i, j, k), v) in &map {
            let mut perms = vec![(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)];
            perms.sort();
            perms.dedup();
            for (a, b, c) in perms {
                full.push((a, b, c, Rat::from_integer(v.clone())));
            }
        }
        Ok(IntersectionForm { rank, entries: map, full })
    }

    /// Convenience constructor from `(i, j, k, value)` quadruples.
    pub fn from_entries(rank: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        Self::new(rank, entries.iter().map(|&(i, j, k, v)| ((i, j, k), BigInt::from(v))))
    }

    /// The diagonal form `sum d_i x_i^3`.
    pub fn diagonal(diag: &[i64]) -> Self {
        let e: Vec<_> = diag.iter().enumerate().map(|(i, &d)| (i, i, i, d)).collect();
        Self::from_entries(diag.len(), &e).expect("valid diagonal form")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Nonzero sorted-triple entries.
    pub fn entries(&self) -> &BTreeMap<(usize, usize, usize), BigInt> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> BigInt {
        let mut idx = [i, j, k];
        idx.sort();
        self.entries.get(&(idx[0], idx[1], idx[2])).cloned().unwrap_or_default()
    }

    fn check(&self, v: &[Rat]) -> Result<()> {
        check_dim(self.rank, v.len())
    }
}

/// `A . B . C`, the full symmetric trilinear extension.
pub fn triple(form: &IntersectionForm, a: &[Rat], b: &[Rat], c: &[Rat]) -> Result<Rat> {
    form.check(a)?;
    form.check(b)?;
    form.check(c)?;
    let mut acc = Rat::zero();
    for (i, j, k, t) in &form.full {
        if a[*i].is_zero() || b[*j].is_zero() || c[*k].is_zero() {
            continue;
        }
        acc += t * &a[*i] * &b[*j] * &c[*k];
    }
    Ok(acc)
}

pub fn cube(form: &IntersectionForm, d: &[Rat]) -> Result<Rat> {
    triple(form, d, d, d)
}

/// The linear class `x -> D^2 . x`.
pub fn square_class(form: &IntersectionForm, d: &[Rat]) -> Result<LinearClass> {
    form.check(d)?;
    let mut out = vec![Rat::zero(); form.rank];
    for (i, j, k, t) in &form.full {
        if d[*i].is_zero() || d[*j].is_zero() {
            continue;
        }
        out[*k] += t * &d[*i] * &d[*j];
    }
    Ok(LinearClass::new(out))
}

/// Whether the bilinear map `(x, y) -> D . x . y` vanishes identically.
fn linear_contraction_is_zero(form: &IntersectionForm, d: &[Rat]) -> bool {
    let n = form.rank;
    let mut m = vec![Rat::zero(); n * n];
    for (i, j, k, t) in &form.full {
        if !d[*i].is_zero() {
            m[j * n + k] += t * &d[*i];
        }
    }
    m.iter().all(Zero::is_zero)
}

/// Largest `k` with `D^k` numerically nonzero.
pub fn numerical_dimension(form: &IntersectionForm, d: &[Rat]) -> Result<u8> {
    form.check(d)?;
    if !cube(form, d)?.is_zero() {
        return Ok(3);
    }
    if !square_class(form, d)?.is_zero() {
        return Ok(2);
    }
    if !linear_contraction_is_zero(form, d) {
        return Ok(1);
    }
    Ok(0)
}

pub fn c2_pair(c2: &LinearClass, d: &[Rat]) -> Result<Rat> {
    c2.eval(d)
}

/// `t0 = H^3 / (3 D.H^2)`, the parameter where `(H - t D)^3` vanishes when
/// `D^2 = 0`.
pub fn wilson_t0(form: &IntersectionForm, h: &[Rat], d: &[Rat]) -> Result<Rat> {
    let nu = numerical_dimension(form, d)?;
    if nu != 1 {
        return Err(Error::Precondition(format!(
            "numerical dimension of D must be 1, got {nu}"
        )));
    }
    let dhh = triple(form, d, h, h)?;
    if dhh.is_zero() {
        return Err(Error::Precondition("D.H^2 = 0".into()));
    }
    Ok(cube(form, h)? / (Rat::from_integer(3.into()) * dhh))
}

/// `N_t = H - t D`.
pub fn wilson_line_point(h: &[Rat], d: &[Rat], t: &Rat) -> Vec<Rat> {
    sub_vec(h, &scale_vec(d, t))
}

/// Strict positivity of `N^3`, `N^2.H` and `N.H^2`.
pub fn key_lemma_flags(form: &IntersectionForm, n: &[Rat], h: &[Rat]) -> Result<(bool, bool, bool)> {
    Ok((
        cube(form, n)?.is_positive(),
        triple(form, n, n, h)?.is_positive(),
        triple(form, n, h, h)?.is_positive(),
    ))
}

/// What the user claims about a named divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Asserted {
    Ample,
    Nef,
}

pub const WARN_C2_ZERO: &str = "c₂(X) ≠ 0 required for a Calabi-Yau threefold";
pub const WARN_MIYAOKA_STRICT: &str = "Miyaoka strictness violated";
pub const WARN_MIYAOKA_NEF: &str = "Miyaoka inequality violated";

/// Sanity warnings from `c2(X) . Nef(X) >= 0`, strict on ample classes.
/// Warnings never block certification.
pub fn validate_input(
    _form: &IntersectionForm,
    c2: &LinearClass,
    divisors: &[(&Divisor, Asserted)],
) -> Vec<String> {
    let mut warnings = Vec::new();
    if c2.is_zero() {
        warnings.push(WARN_C2_ZERO.to_string());
    }
    for (d, kind) in divisors {
        let Ok(v) = c2.eval(d) else { continue };
        let name = d.name.as_deref().unwrap_or("?");
        match kind {
            Asserted::Ample if !v.is_positive() => warnings.push(format!(
                "{WARN_MIYAOKA_STRICT}: asserted-ample {name} has c2·{name} = {}",
                fmt_rat(&v)
            )),
            Asserted::Nef if v.is_negative() => warnings.push(format!(
                "{WARN_MIYAOKA_NEF}: asserted-nef {name} has c2·{name} = {}",
                fmt_rat(&v)
            )),
            _ => {}
        }
    }
    warnings
}

/// `e_i` as a divisor.
pub fn basis_divisor(n: usize, i: usize) -> Divisor {
    Divisor::named(format!("e{i}"), basis_vec(n, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rvec};

    #[test]
    fn triple_examples() {
        let f = IntersectionForm::from_entries(1, &[(0, 0, 0, 5)]).unwrap();
        let e0 = rvec(&[1]);
        assert_eq!(triple(&f, &e0, &e0, &e0).unwrap(), int(5));

        let f = IntersectionForm::diagonal(&[1, 1]);
        let a = rvec(&[1, 1]);
        assert_eq!(triple(&f, &a, &a, &a).unwrap(), int(2));

        let f = IntersectionForm::diagonal(&[1, 1, -2]);
        let b = rvec(&[2, 0, 1]);
        assert_eq!(triple(&f, &rvec(&[1, 1, 1]), &b, &b).unwrap(), int(2));
        assert!(triple(&f, &rvec(&[1, 1]), &b, &b).is_err());
    }

    #[test]
    fn cube_and_square_class() {
        let f = IntersectionForm::diagonal(&[1, 1, -2]);
        assert_eq!(cube(&f, &rvec(&[0, 0, 0])).unwrap(), int(0));
        assert_eq!(cube(&f, &rvec(&[1, 1, 1])).unwrap(), int(0));
        assert_eq!(cube(&f, &rvec(&[1, 0, 0])).unwrap(), int(1));
        assert_eq!(square_class(&f, &rvec(&[1, 1, 1])).unwrap().coords, rvec(&[1, 1, -2]));
        assert!(square_class(&f, &rvec(&[0, 0, 0])).unwrap().is_zero());

        let g = IntersectionForm::from_entries(3, &[(0, 0, 0, 1), (1, 1, 1, 1), (0, 2, 2, 1)]).unwrap();
        assert_eq!(square_class(&g, &rvec(&[1, -1, 0])).unwrap().coords, rvec(&[1, 1, 0]));
    }

    #[test]
    fn numerical_dimension_examples() {
        let f = IntersectionForm::from_entries(1, &[(0, 0, 0, 1)]).unwrap();
        assert_eq!(numerical_dimension(&f, &rvec(&[1])).unwrap(), 3);
        let f = IntersectionForm::from_entries(2, &[(0, 0, 1, 1)]).unwrap();
        assert_eq!(numerical_dimension(&f, &rvec(&[1, 0])).unwrap(), 2);
        let f = IntersectionForm::from_entries(2, &[(0, 1, 1, 1)]).unwrap();
        assert_eq!(numerical_dimension(&f, &rvec(&[1, 0])).unwrap(), 1);
        let f = IntersectionForm::from_entries(2, &[(0, 0, 0, 1)]).unwrap();
        assert_eq!(numerical_dimension(&f, &rvec(&[0, 1])).unwrap(), 0);
    }

    #[test]
    fn c2_examples() {
        let c2 = LinearClass::new(rvec(&[0, 0, 0, 1]));
        assert_eq!(c2_pair(&c2, &rvec(&[1, 1, 1, 0])).unwrap(), int(0));
        assert_eq!(c2_pair(&c2, &rvec(&[-1, 3, 1, -2])).unwrap(), int(-2));
        let c2 = LinearClass::new(rvec(&[4, -7, 9, 2]));
        assert_eq!(c2_pair(&c2, &rvec(&[0, 0, 0, 0])).unwrap(), int(0));
    }

    #[test]
    fn wilson_examples() {
        // F = 3 x0 x1^2: D = e0 has nu = 1, H = (1, 1) has H^3 = 3, D.H^2 = 1
        let f = IntersectionForm::from_entries(2, &[(0, 1, 1, 1)]).unwrap();
        let d = rvec(&[1, 0]);
        let h = rvec(&[1, 1]);
        assert_eq!(cube(&f, &h).unwrap(), int(3));
        let t0 = wilson_t0(&f, &h, &d).unwrap();
        assert_eq!(t0, int(1));
        assert_eq!(cube(&f, &wilson_line_point(&h, &d, &t0)).unwrap(), int(0));
        // H^3 = 0, D.H^2 = 5
        let h = rvec(&[0, 1]);
        let f5 = IntersectionForm::from_entries(2, &[(0, 1, 1, 5)]).unwrap();
        assert_eq!(wilson_t0(&f5, &h, &d).unwrap(), int(0));
        // nu(D) = 2 is rejected
        let g = IntersectionForm::from_entries(2, &[(0, 0, 1, 1)]).unwrap();
        assert!(matches!(wilson_t0(&g, &h, &d), Err(Error::Precondition(_))));
    }

    #[test]
    fn key_lemma_examples() {
        let f = IntersectionForm::from_entries(1, &[(0, 0, 0, 1)]).unwrap();
        let e = rvec(&[1]);
        assert_eq!(key_lemma_flags(&f, &e, &e).unwrap(), (true, true, true));
        let f = IntersectionForm::diagonal(&[1, 1, -2]);
        let n = rvec(&[1, 1, 1]);
        let h = rvec(&[1, 0, 0]);
        assert_eq!(triple(&f, &n, &n, &h).unwrap(), int(1));
        let flags = key_lemma_flags(&f, &n, &h).unwrap();
        assert_eq!((flags.0, flags.1), (false, true));
    }

    #[test]
    fn validation_warnings() {
        let f = IntersectionForm::diagonal(&[1, 1]);
        let h = Divisor::named("H", rvec(&[1, 0]));
        let c2 = LinearClass::new(rvec(&[7, 0]));
        assert!(validate_input(&f, &c2, &[(&h, Asserted::Ample)]).is_empty());
        let c2 = LinearClass::new(rvec(&[0, 1]));
        let w = validate_input(&f, &c2, &[(&h, Asserted::Ample)]);
        assert_eq!(w.len(), 1);
        assert!(w[0].starts_with(WARN_MIYAOKA_STRICT));
        let w = validate_input(&f, &LinearClass::new(rvec(&[0, 0])), &[]);
        assert_eq!(w, vec![WARN_C2_ZERO.to_string()]);
        let d = Divisor::named("D", rvec(&[0, -1]));
        let w = validate_input(&f, &LinearClass::new(rvec(&[0, 1])), &[(&d, Asserted::Nef)]);
        assert!(w[0].starts_with(WARN_MIYAOKA_NEF));
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(IntersectionForm::from_entries(2, &[(1, 0, 0, 5)]).is_err());
        assert!(IntersectionForm::from_entries(2, &[(0, 0, 2, 5)]).is_err());
        assert!(IntersectionForm::from_entries(2, &[(0, 0, 1, 5), (0, 0, 1, 1)]).is_err());
    }
}
