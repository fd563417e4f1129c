//! Rational points on the cubic null cone `{x³ = 0}`: third points on
//! chords, residual points on tangent lines, the breadth-first chase through
//! tangent hyperplane sections, flexes, and singular points of plane cubics.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cubicfactor::{
    expand_cubic, factor_quadratic_form, is_perfect_cube_linear, CubicForm, QuadraticFactorization,
};
use crate::error::{Error, Result};
use crate::exactmath::{
    basis_vec, fmt_rat, int, is_parallel, is_zero_vec, kernel_basis, normalize_projective,
    primitive, rational_roots, scale_vec, sub_vec, Mat, Poly, Rat, UniPoly,
};
use crate::nsring::{c2_pair, cube, numerical_dimension, square_class, triple, IntersectionForm, LinearClass};
use crate::quadpoints::{isotropic_vector, IsotropyVerdict, QuadraticForm, DEFAULT_HEIGHT_BOUND};

pub const DEFAULT_DEPTH: u32 = 3;
pub const DEFAULT_BUDGET: u32 = 500;

// nodes visited while enumerating tangent directions at one point
const ENUMERATION_CAP: usize = 400_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChasePoint {
    Point(Vec<Rat>),
    LineContained,
}

impl ChasePoint {
    pub fn point(&self) -> Option<&[Rat]> {
        match self {
            ChasePoint::Point(p) => Some(p),
            ChasePoint::LineContained => None,
        }
    }
}

fn on_cubic(form: &IntersectionForm, p: &[Rat], what: &str) -> Result<()> {
    let v = cube(form, p)?;
    if is_zero_vec(p) {
        return Err(Error::Precondition(format!("{what} is zero")));
    }
    if !v.is_zero() {
        return Err(Error::Precondition(format!("{what} is not on the cubic: cube = {}", fmt_rat(&v))));
    }
    Ok(())
}

/// Third intersection of the chord through `P1` and `P2` with the cubic.
pub fn third_point_on_line(form: &IntersectionForm, p1: &[Rat], p2: &[Rat]) -> Result<ChasePoint> {
    on_cubic(form, p1, "P1")?;
    on_cubic(form, p2, "P2")?;
    if is_parallel(p1, p2) {
        return Err(Error::Precondition("P1 and P2 are proportional".into()));
    }
    // F(s P1 + t P2) = s t (c1 s + c2 t)
    let c1 = int(3) * triple(form, p1, p1, p2)?;
    let c2 = int(3) * triple(form, p1, p2, p2)?;
    if c1.is_zero() && c2.is_zero() {
        return Ok(ChasePoint::LineContained);
    }
    let p = sub_vec(&scale_vec(p1, &c2), &scale_vec(p2, &c1));
    Ok(ChasePoint::Point(primitive(&p)))
}

/// Residual point of the tangent line through `D` in direction `x`:
/// `(x³) D − 3 (D·x²) x`.
pub fn residual_on_tangent(form: &IntersectionForm, d: &[Rat], x: &[Rat]) -> Result<ChasePoint> {
    on_cubic(form, d, "D")?;
    let ell = square_class(form, d)?;
    let lx = ell.eval(x)?;
    if !lx.is_zero() {
        return Err(Error::Precondition(format!(
            "x is not in the tangent hyperplane: D²·x = {}",
            fmt_rat(&lx)
        )));
    }
    if is_zero_vec(x) || is_parallel(d, x) {
        return Err(Error::Precondition("x must be independent of D".into()));
    }
    let x3 = cube(form, x)?;
    let dxx = triple(form, d, x, x)?;
    if x3.is_zero() && dxx.is_zero() {
        return Ok(ChasePoint::LineContained);
    }
    let e = sub_vec(&scale_vec(d, &x3), &scale_vec(x, &(int(3) * dxx)));
    Ok(ChasePoint::Point(primitive(&e)))
}

pub fn is_singular_at(form: &IntersectionForm, p: &[Rat]) -> Result<bool> {
    on_cubic(form, p, "P")?;
    Ok(square_class(form, p)?.is_zero())
}

/// Integer directions `x` with `ℓ·x = 0`, primitive with positive leading
/// entry and not proportional to `p`, ordered by height and then
/// zigzag-lexicographically (0, 1, -1, 2, -2, ...). At most `budget`.
pub fn tangent_directions(ell: &LinearClass, p: &[Rat], budget: usize) -> Vec<Vec<Rat>> {
    let l: Vec<BigInt> = primitive(&ell.coords).iter().map(|c| c.to_integer()).collect();
    let n = l.len();
    let mut out = Vec::new();
    let Some(pivot) = (0..n).rev().find(|&i| !l[i].is_zero()) else {
        return out;
    };
    let mut spent = 0usize;
    let mut h = 1i64;
    while out.len() < budget && spent < ENUMERATION_CAP && h <= 1_000_000 {
        let mut buf = Vec::with_capacity(n);
        let mut walk = Walk { l: &l, pivot, h, budget, spent: &mut spent, out: &mut out, p };
        walk.rec(&mut buf, BigInt::zero(), false, false);
        h += 1;
    }
    out
}

struct Walk<'a> {
    l: &'a [BigInt],
    pivot: usize,
    h: i64,
    budget: usize,
    spent: &'a mut usize,
    out: &'a mut Vec<Vec<Rat>>,
    p: &'a [Rat],
}

impl Walk<'_> {
    // returns false to stop
    fn rec(&mut self, buf: &mut Vec<i64>, acc: BigInt, hit: bool, started: bool) -> bool {
        *self.spent += 1;
        if *self.spent > ENUMERATION_CAP {
            return false;
        }
        let k = buf.len();
        if k == self.l.len() {
            if hit && started {
                let g = buf.iter().fold(0i64, |a, &b| a.gcd(&b));
                if g == 1 {
                    let x: Vec<Rat> = buf.iter().map(|&v| int(v)).collect();
                    if !is_parallel(&x, self.p) {
                        self.out.push(x);
                    }
                }
            }
            return self.out.len() < self.budget;
        }
        let try_digit = |this: &mut Self, buf: &mut Vec<i64>, d: i64| -> bool {
            if !started && d < 0 {
                return true;
            }
            buf.push(d);
            let acc2 = &acc + &this.l[k] * BigInt::from(d);
            let go = this.rec(buf, acc2, hit || d.abs() == this.h, started || d != 0);
            buf.pop();
            go
        };
        if k == self.pivot {
            // l_pivot x_pivot = -(sum of earlier terms); later l_i vanish
            let (q, r) = (-&acc).div_rem(&self.l[k]);
            if !r.is_zero() || q.abs() > BigInt::from(self.h) {
                return true;
            }
            let d: i64 = q.try_into().expect("bounded by h");
            return try_digit(self, buf, d);
        }
        if !try_digit(self, buf, 0) {
            return false;
        }
        for m in 1..=self.h {
            if !try_digit(self, buf, m) || !try_digit(self, buf, -m) {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DegeneracyKind {
    LineContained,
    SectionIsPerfectCube,
    PointSingular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub kind: DegeneracyKind,
    pub point: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: Vec<Rat>,
    pub direction: Vec<Rat>,
    pub to: Vec<Rat>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChaseTrace {
    pub visited: Vec<Vec<Rat>>,
    pub edges: Vec<Edge>,
    pub degeneracies: Vec<Degeneracy>,
    /// First point found with `c2·E != 0`.
    pub witness: Option<Vec<Rat>>,
    /// Depth or budget ran out without a witness.
    pub exhausted: bool,
}

/// Breadth-first propagation through tangent residual points, stopping at
/// the first point `E` with `c2·E != 0`.
pub fn chase(
    form: &IntersectionForm,
    c2: &LinearClass,
    d: &[Rat],
    depth: u32,
    budget: u32,
) -> Result<ChaseTrace> {
    if depth == 0 || budget == 0 {
        return Err(Error::Precondition("depth and budget must be positive".into()));
    }
    on_cubic(form, d, "D")?;
    if numerical_dimension(form, d)? < 2 {
        return Err(Error::Precondition("D must be a smooth point of the cubic".into()));
    }
    let start = primitive(d);
    let mut trace = ChaseTrace { visited: vec![start.clone()], ..Default::default() };
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    seen.insert(normalize_projective(&start));
    let mut level = vec![start];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &level {
            let ell = square_class(form, p)?;
            if ell.is_zero() {
                trace.degeneracies.push(Degeneracy { kind: DegeneracyKind::PointSingular, point: p.clone() });
                continue;
            }
            let mut useful = 0usize;
            let mut contained = false;
            for x in tangent_directions(&ell, p, budget as usize) {
                match residual_on_tangent(form, p, &x)? {
                    ChasePoint::LineContained => contained = true,
                    ChasePoint::Point(e) => {
                        if is_parallel(&e, p) {
                            continue;
                        }
                        useful += 1;
                        trace.edges.push(Edge { from: p.clone(), direction: x, to: e.clone() });
                        if seen.insert(normalize_projective(&e)) {
                            trace.visited.push(e.clone());
                            next.push(e.clone());
                        }
                        if !c2_pair(c2, &e)?.is_zero() {
                            trace.witness = Some(e);
                            return Ok(trace);
                        }
                    }
                }
            }
            if contained {
                trace.degeneracies.push(Degeneracy { kind: DegeneracyKind::LineContained, point: p.clone() });
            }
            if useful == 0 && section_is_cube(form, &ell)? {
                trace.degeneracies.push(Degeneracy {
                    kind: DegeneracyKind::SectionIsPerfectCube,
                    point: p.clone(),
                });
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    trace.exhausted = true;
    Ok(trace)
}

/// Whether the cubic restricted to the hyperplane `ℓ = 0` is a cube of a
/// linear form.
pub fn section_is_cube(form: &IntersectionForm, ell: &LinearClass) -> Result<bool> {
    let basis = kernel_basis(&Mat::from_rows(std::slice::from_ref(&ell.coords)));
    let f = expand_cubic(form);
    let r = f.poly().restrict_to_span(&basis);
    Ok(!r.is_zero() && is_perfect_cube_linear(&CubicForm::new(r)?).is_some())
}

/// Result of the flex test at a smooth point of a plane cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflectionTest {
    pub is_flex: bool,
    /// Tangent direction `G` independent of `E`.
    pub witness: Vec<Rat>,
    /// `E·G²`, zero exactly at a flex.
    pub obstruction: Rat,
}

/// `E` is a flex iff `E·G² = 0` for a tangent direction `G` not
/// proportional to `E`.
pub fn inflection_test(form: &IntersectionForm, e: &[Rat]) -> Result<InflectionTest> {
    if form.rank() != 3 {
        return Err(Error::Precondition(format!("flex test needs rank 3, got {}", form.rank())));
    }
    on_cubic(form, e, "E")?;
    let ell = square_class(form, e)?;
    if ell.is_zero() {
        return Err(Error::Precondition("E is a singular point".into()));
    }
    let g = kernel_basis(&Mat::from_rows(std::slice::from_ref(&ell.coords)))
        .into_iter()
        .find(|g| !is_parallel(g, e))
        .expect("tangent plane has dimension 2");
    let v = triple(form, e, &g, &g)?;
    Ok(InflectionTest { is_flex: v.is_zero(), witness: g, obstruction: v })
}

/// The quadrics `x ↦ (x²)_m`, i.e. a third of the partial derivatives.
fn gradient_quadrics(form: &IntersectionForm) -> Vec<Poly> {
    let n = form.rank();
    let mut out = vec![Poly::zero(n); n];
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                let t = form.entry(i, j, m);
                if t.is_zero() {
                    continue;
                }
                let mut e = vec![0u32; n];
                e[i] += 1;
                e[j] += 1;
                out[m].add_term(e, Rat::from_integer(t));
            }
        }
    }
    out
}

/// A rational singular point of the plane cubic, or `None` when the
/// elimination proves there is none.
pub fn ternary_singular_point(form: &IntersectionForm) -> Result<Option<Vec<Rat>>> {
    if form.rank() != 3 {
        return Err(Error::Precondition(format!("plane cubic needs rank 3, got {}", form.rank())));
    }
    let qs: Vec<Poly> = gradient_quadrics(form).into_iter().filter(|q| !q.is_zero()).collect();
    if qs.is_empty() {
        return Err(Error::Precondition("cubic is identically zero".into()));
    }
    let found = singular_candidates(&qs)?;
    if let Some(p) = &found {
        if !square_class(form, p)?.is_zero() || !cube(form, p)?.is_zero() {
            return Err(Error::Invalid("singular point failed verification".into()));
        }
    }
    Ok(found)
}

fn singular_candidates(qs: &[Poly]) -> Result<Option<Vec<Rat>>> {
    let q0 = &qs[0];
    if qs[1..].iter().all(|q| proportional(q, q0)) {
        return conic_point(q0);
    }
    if let Some(p) = affine_common_zero(qs)? {
        return Ok(Some(p));
    }
    // z = 0: points (x, 1, 0), then (1, 0, 0)
    let polys: Vec<UniPoly> = qs.iter().map(|q| line_restriction(q, |x| vec![x.clone(), Rat::one(), Rat::zero()])).collect();
    if let Some(x) = common_root(&polys)? {
        return Ok(Some(normalize_projective(&[x, Rat::one(), Rat::zero()])));
    }
    let e0 = basis_vec(3, 0);
    for q in qs {
        if !q.eval(&e0)?.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(e0))
}

fn proportional(a: &Poly, b: &Poly) -> bool {
    let Some((e, c)) = b.leading_term() else { return a.is_zero() };
    let s = a.coeff(e) / c;
    b.scale(&s) == *a
}

fn conic_point(q: &Poly) -> Result<Option<Vec<Rat>>> {
    let qf = QuadraticForm::from_poly(q)?;
    Ok(match isotropic_vector(&qf, DEFAULT_HEIGHT_BOUND)? {
        IsotropyVerdict::Isotropic(w) => Some(w),
        IsotropyVerdict::Degenerate(rad) => Some(rad[0].clone()),
        IsotropyVerdict::Anisotropic(_) => None,
    })
}

// q evaluated along a one-parameter family of points, as a polynomial in x
fn line_restriction(q: &Poly, point: impl Fn(&Rat) -> Vec<Rat>) -> UniPoly {
    // degree <= 2: interpolate at 0, 1, -1
    let v: Vec<Rat> = [int(0), int(1), int(-1)]
        .iter()
        .map(|x| q.eval(&point(x)).expect("dimension 3"))
        .collect();
    let two = int(2);
    let a = (&v[1] + &v[2] - &v[0] * &two) / &two;
    let b = (&v[1] - &v[2]) / &two;
    UniPoly::new(vec![v[0].clone(), b, a])
}

// a rational common root of the polynomials; any value if all vanish
fn common_root(polys: &[UniPoly]) -> Result<Option<Rat>> {
    let g = polys.iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p));
    if g.is_zero() {
        return Ok(Some(Rat::zero()));
    }
    Ok(rational_roots(&g)?.into_iter().next().map(|(r, _)| r))
}

// q(x, y, 1) as coefficients in y with entries in ℚ[x]
fn as_bivariate(q: &Poly) -> Vec<UniPoly> {
    let mut c = vec![vec![Rat::zero(); 3]; 3];
    for (e, v) in q.terms() {
        c[e[1] as usize][e[0] as usize] += v;
    }
    let mut out: Vec<UniPoly> = c.into_iter().map(UniPoly::new).collect();
    while out.last().is_some_and(UniPoly::is_zero) {
        out.pop();
    }
    out
}

fn affine_common_zero(qs: &[Poly]) -> Result<Option<Vec<Rat>>> {
    let bis: Vec<Vec<UniPoly>> = qs.iter().map(as_bivariate).collect();
    let mut res = None;
    'pairs: for i in 0..bis.len() {
        for j in i + 1..bis.len() {
            let r = resultant(&bis[i], &bis[j]);
            if !r.is_zero() {
                res = Some(r);
                break 'pairs;
            }
        }
    }
    let Some(res) = res else {
        // the quadrics share a factor; not all proportional, so it is a
        // rational line contained in every gradient quadric
        return Ok(Some(common_line_point(qs)?));
    };
    for (x, _) in rational_roots(&res)? {
        let polys: Vec<UniPoly> = qs
            .iter()
            .map(|q| line_restriction(q, |y| vec![x.clone(), y.clone(), Rat::one()]))
            .collect();
        if let Some(y) = common_root(&polys)? {
            return Ok(Some(normalize_projective(&[x, y, Rat::one()])));
        }
    }
    Ok(None)
}

fn common_line_point(qs: &[Poly]) -> Result<Vec<Rat>> {
    for q in qs {
        if let QuadraticFactorization::ProductOfTwoLinear(a, b) = factor_quadratic_form(&QuadraticForm::from_poly(q)?)? {
            for l in [a, b] {
                let lp = l.to_poly();
                let mut all = true;
                for q2 in qs {
                    if q2.exact_divide(&lp)?.is_none() {
                        all = false;
                        break;
                    }
                }
                if all {
                    let k = kernel_basis(&Mat::from_rows(std::slice::from_ref(&l.coords)));
                    return Ok(k[0].clone());
                }
            }
        }
    }
    Err(Error::Invalid("gradient quadrics share no rational line".into()))
}

/// Sylvester resultant in `y` of two polynomials with coefficients in ℚ[x]
/// (constant term first).
fn resultant(f: &[UniPoly], g: &[UniPoly]) -> UniPoly {
    if f.is_empty() || g.is_empty() {
        return UniPoly::zero();
    }
    let (m, n) = (f.len() - 1, g.len() - 1);
    if m == 0 && n == 0 {
        return f[0].gcd(&g[0]);
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for k in 0..n {
        let mut row = vec![UniPoly::zero(); size];
        for (i, c) in f.iter().rev().enumerate() {
            row[k + i] = c.clone();
        }
        rows.push(row);
    }
    for k in 0..m {
        let mut row = vec![UniPoly::zero(); size];
        for (i, c) in g.iter().rev().enumerate() {
            row[k + i] = c.clone();
        }
        rows.push(row);
    }
    det_poly(&rows)
}

fn det_poly(m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = UniPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let t = m[0][j].mul(&det_poly(&minor));
        acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rvec;

    fn same_point(a: &[Rat], b: &[i64]) -> bool {
        is_parallel(a, &rvec(b))
    }

    #[test]
    fn third_point_examples() {
        let f = IntersectionForm::diagonal(&[1, 1, 1]);
        let p = third_point_on_line(&f, &rvec(&[1, -1, 0]), &rvec(&[0, 1, -1])).unwrap();
        assert!(same_point(p.point().unwrap(), &[1, 0, -1]));
        let p = third_point_on_line(&f, &rvec(&[1, -1, 0]), &rvec(&[1, 0, -1])).unwrap();
        assert!(same_point(p.point().unwrap(), &[0, 1, -1]));
        assert!(third_point_on_line(&f, &rvec(&[1, -1, 0]), &rvec(&[1, -1, 0])).is_err());
    }

    #[test]
    fn residual_examples() {
        let f = IntersectionForm::diagonal(&[1, 1, -2, 3]);
        let e = residual_on_tangent(&f, &rvec(&[1, 1, 1, 0]), &rvec(&[1, -1, 0, 1])).unwrap();
        assert_eq!(e.point().unwrap(), rvec(&[-1, 3, 1, -2]).as_slice());
        let f = IntersectionForm::diagonal(&[1, 1, -2]);
        let e = residual_on_tangent(&f, &rvec(&[1, 1, 1]), &rvec(&[2, 0, 1])).unwrap();
        assert!(same_point(e.point().unwrap(), &[-1, 1, 0]));
        let g = IntersectionForm::from_entries(3, &[(0, 0, 0, 1), (1, 1, 1, 1), (0, 2, 2, 1)]).unwrap();
        let e = residual_on_tangent(&g, &rvec(&[1, -1, 0]), &rvec(&[0, 0, 1])).unwrap();
        assert!(same_point(e.point().unwrap(), &[0, 0, 1]));
        assert!(residual_on_tangent(&f, &rvec(&[1, 1, 1]), &rvec(&[1, 0, 0])).is_err());
    }

    #[test]
    fn chase_examples() {
        let f = IntersectionForm::diagonal(&[1, 1, -2, 3]);
        let c2 = LinearClass::new(rvec(&[0, 0, 0, 1]));
        let t = chase(&f, &c2, &rvec(&[1, 1, 1, 0]), 3, 500).unwrap();
        assert_eq!(t.witness, Some(rvec(&[-1, 3, 1, -2])));
        assert!(!t.exhausted);
        assert!(chase(&f, &c2, &rvec(&[1, 1, 1, 0]), 3, 0).is_err());
        assert_eq!(t, chase(&f, &c2, &rvec(&[1, 1, 1, 0]), 3, 500).unwrap());
    }

    #[test]
    fn perfect_cube_section_is_flagged() {
        // the tangent line to x^3 + y^3 - 2z^3 at (-1, 1, 0) meets it only there
        let f = IntersectionForm::diagonal(&[1, 1, -2]);
        let c2 = LinearClass::new(rvec(&[1, 1, -2]));
        let t = chase(&f, &c2, &rvec(&[-1, 1, 0]), 2, 20).unwrap();
        assert!(t.exhausted);
        assert!(t.degeneracies.iter().any(|d| d.kind == DegeneracyKind::SectionIsPerfectCube));
        // the section of x^3 + y^3 + 3xz^2 at (1, -1, 0) is 3 s t^2, not a cube
        let g = IntersectionForm::from_entries(3, &[(0, 0, 0, 1), (1, 1, 1, 1), (0, 2, 2, 1)]).unwrap();
        let ell = square_class(&g, &rvec(&[1, -1, 0])).unwrap();
        assert!(!section_is_cube(&g, &ell).unwrap());
    }

    #[test]
    fn direction_order() {
        let ell = LinearClass::new(rvec(&[1, 1, -2, 0]));
        let dirs = tangent_directions(&ell, &rvec(&[1, 1, 1, 0]), 4);
        assert_eq!(dirs, vec![rvec(&[0, 0, 0, 1]), rvec(&[1, 1, 1, 1]), rvec(&[1, 1, 1, -1]), rvec(&[1, -1, 0, 0])]);
    }

    #[test]
    fn inflection_examples() {
        let f = IntersectionForm::diagonal(&[1, 1, -2]);
        let t = inflection_test(&f, &rvec(&[-1, 1, 0])).unwrap();
        assert!(t.is_flex);
        assert!(triple(&f, &rvec(&[-1, 1, 0]), &rvec(&[1, -1, 1]), &rvec(&[1, -1, 1])).unwrap().is_zero());
        let t = inflection_test(&f, &rvec(&[1, 1, 1])).unwrap();
        assert!(!t.is_flex);
        assert_eq!(t.obstruction, int(2));
        let cone = IntersectionForm::from_entries(3, &[(0, 1, 2, 1)]).unwrap();
        assert!(inflection_test(&cone, &rvec(&[1, 0, 0])).is_err());
    }

    #[test]
    fn singularity_examples() {
        let cone = IntersectionForm::from_entries(3, &[(0, 1, 2, 1)]).unwrap();
        assert!(is_singular_at(&cone, &rvec(&[1, 0, 0])).unwrap());
        let f = IntersectionForm::diagonal(&[1, 1, -2]);
        assert!(!is_singular_at(&f, &rvec(&[1, 1, 1])).unwrap());

        let x3 = IntersectionForm::from_entries(3, &[(0, 0, 0, 1)]).unwrap();
        let p = ternary_singular_point(&x3).unwrap().unwrap();
        assert!(p[0].is_zero());
        assert_eq!(ternary_singular_point(&f).unwrap(), None);
        let p = ternary_singular_point(&cone).unwrap().unwrap();
        assert_eq!(p.iter().filter(|x| x.is_zero()).count(), 2);
        // nodal cubic y^2 z = x^3 + x^2 z, node at (0, 0, 1)
        let nodal = IntersectionForm::from_entries(3, &[(0, 0, 0, 3), (0, 0, 2, 1), (1, 1, 2, -1)]).unwrap();
        assert_eq!(ternary_singular_point(&nodal).unwrap(), Some(rvec(&[0, 0, 1])));
        assert!(ternary_singular_point(&IntersectionForm::diagonal(&[1, 1])).is_err());
    }
}
