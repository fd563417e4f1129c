//! Rational quadratic forms: congruence diagonalization, local isotropy via
//! Hilbert symbols, explicit isotropic vectors, and rational points by
//! projection from a known point.

mod hilbert;
mod legendre;

pub use hilbert::{hilbert_symbol, Place};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactmath::ntheory::square_class;
use crate::exactmath::{
    add_vec, dot, for_each_of_height, int, is_parallel, is_zero_vec, kernel_basis,
    normalize_projective, primitive, scale_vec, Mat, Poly, Rat,
};

/// Default height bound for the last-resort enumeration of isotropic vectors.
pub const DEFAULT_HEIGHT_BOUND: u64 = 1_000_000;

/// Directions tried by `sample_points` before giving up.
const MAX_DIRECTIONS: usize = 20_000;

/// Evaluations allowed in the brute-force fallback of `isotropic_vector`.
const MAX_ENUMERATION: usize = 2_000_000;

/// Small vectors tried on the undiagonalized form before the exact solver.
const SMALL_SEARCH: usize = 20_000;

/// `ℓ(x) = coords · x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearForm {
    pub coords: Vec<Rat>,
}

impl LinearForm {
    pub fn new(coords: Vec<Rat>) -> Self {
        LinearForm { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn eval(&self, x: &[Rat]) -> Result<Rat> {
        check_dim(self.coords.len(), x.len())?;
        Ok(dot(&self.coords, x))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::linear(&self.coords)
    }

    /// Primitive integral multiple with positive leading coefficient.
    pub fn normalized(&self) -> LinearForm {
        LinearForm::new(normalize_projective(&self.coords))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }
}

/// `Q(x) = xᵀ S x` with `S` symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    sym: Mat,
}

impl QuadraticForm {
    pub fn new(sym: Mat) -> Result<Self> {
        if sym.rows() == 0 {
            return Err(Error::Invalid("quadratic form in zero variables".into()));
        }
        if !sym.is_symmetric() {
            return Err(Error::Invalid("Gram matrix is not symmetric".into()));
        }
        Ok(QuadraticForm { sym })
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let mut m = Mat::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = int(x);
        }
        QuadraticForm { sym: m }
    }

    /// From a homogeneous quadratic polynomial (or zero).
    pub fn from_poly(p: &Poly) -> Result<Self> {
        let n = p.nvars();
        if !p.is_zero() && p.homogeneous_degree() != Some(2) {
            return Err(Error::Invalid(format!("not a quadratic form: {p}")));
        }
        let mut m = Mat::zeros(n, n);
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        for (e, c) in p.terms() {
            let idx: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
            match idx.as_slice() {
                [i] => m[(*i, *i)] = c.clone(),
                [i, j] => {
                    m[(*i, *j)] = c * &half;
                    m[(*j, *i)] = c * &half;
                }
                _ => unreachable!(),
            }
        }
        QuadraticForm::new(m)
    }

    pub fn to_poly(&self) -> Poly {
        let n = self.dim();
        let mut p = Poly::zero(n);
        for i in 0..n {
            for j in i..n {
                let c = &self.sym[(i, j)];
                if c.is_zero() {
                    continue;
                }
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                p.add_term(e, if i == j { c.clone() } else { c * int(2) });
            }
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.sym.rows()
    }

    pub fn sym(&self) -> &Mat {
        &self.sym
    }

    pub fn eval(&self, x: &[Rat]) -> Result<Rat> {
        self.polar(x, x)
    }

    /// Polar form `B(v, w) = vᵀ S w`, so `Q(v + w) = Q(v) + 2B(v, w) + Q(w)`.
    pub fn polar(&self, v: &[Rat], w: &[Rat]) -> Result<Rat> {
        check_dim(self.dim(), v.len())?;
        check_dim(self.dim(), w.len())?;
        Ok(dot(v, &self.sym.mul_vec(w)))
    }

    pub fn is_zero(&self) -> bool {
        self.sym.is_zero()
    }
}

/// Congruence diagonalization: `Pᵀ S P = diag(entries)`, `P` invertible.
pub fn diagonalize(q: &QuadraticForm) -> (Mat, Vec<Rat>) {
    let n = q.dim();
    let mut m = q.sym.clone();
    let mut p = Mat::identity(n);
    for k in 0..n {
        if m[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                swap_basis(&mut m, &mut p, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                // e_k += e_j gives Q(e_k) = 2 B(e_k, e_j) != 0
                add_basis(&mut m, &mut p, k, j, &Rat::one());
            } else {
                continue;
            }
        }
        let piv = m[(k, k)].clone();
        for j in k + 1..n {
            if !m[(k, j)].is_zero() {
                let f = -(&m[(k, j)] / &piv);
                add_basis(&mut m, &mut p, j, k, &f);
            }
        }
    }
    let d = (0..n).map(|i| m[(i, i)].clone()).collect();
    (p, d)
}

fn swap_basis(m: &mut Mat, p: &mut Mat, a: usize, b: usize) {
    let n = m.rows();
    for i in 0..n {
        let t = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = t;
    }
    for j in 0..n {
        let t = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = t;
    }
    for i in 0..n {
        let t = p[(i, a)].clone();
        p[(i, a)] = p[(i, b)].clone();
        p[(i, b)] = t;
    }
}

// e_a <- e_a + f e_b
fn add_basis(m: &mut Mat, p: &mut Mat, a: usize, b: usize, f: &Rat) {
    let n = m.rows();
    for i in 0..n {
        let d = f * &m[(i, b)];
        m[(i, a)] += d;
    }
    for j in 0..n {
        let d = f * &m[(b, j)];
        m[(a, j)] += d;
    }
    for i in 0..n {
        let d = f * &p[(i, b)];
        p[(i, a)] += d;
    }
}

/// Basis of `{v : S v = 0}`.
pub fn radical(q: &QuadraticForm) -> Vec<Vec<Rat>> {
    kernel_basis(&q.sym)
}

/// Outcome of an isotropy test or witness search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsotropyVerdict {
    /// Primitive integer vector with `Q(w) = 0`. Empty when only the
    /// verdict was requested.
    Isotropic(Vec<Rat>),
    Anisotropic(Place),
    Degenerate(Vec<Vec<Rat>>),
}

impl IsotropyVerdict {
    pub fn is_isotropic(&self) -> bool {
        matches!(self, IsotropyVerdict::Isotropic(_))
    }

    pub fn witness(&self) -> Option<&[Rat]> {
        match self {
            IsotropyVerdict::Isotropic(w) if !w.is_empty() => Some(w),
            _ => None,
        }
    }
}

// squarefree integer representatives of the nonzero diagonal entries, and
// the rational r_i with d_i = core_i r_i^2
fn diagonal_cores(d: &[Rat]) -> Vec<(usize, BigInt, Rat)> {
    d.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| {
            let (core, r) = square_class(x);
            (i, core, r)
        })
        .collect()
}

/// Local-global isotropy verdict without constructing a witness.
pub fn is_isotropic(q: &QuadraticForm) -> IsotropyVerdict {
    let rad = radical(q);
    if !rad.is_empty() {
        return IsotropyVerdict::Degenerate(rad);
    }
    let (_, d) = diagonalize(q);
    let cores: Vec<BigInt> = diagonal_cores(&d).into_iter().map(|(_, c, _)| c).collect();
    match hilbert::local_obstruction(&cores) {
        Some(place) => IsotropyVerdict::Anisotropic(place),
        None => IsotropyVerdict::Isotropic(Vec::new()),
    }
}

/// Isotropy verdict with a verified witness for nondegenerate `Q`.
pub fn isotropic_vector(q: &QuadraticForm, height_bound: u64) -> Result<IsotropyVerdict> {
    let rad = radical(q);
    if !rad.is_empty() {
        return Ok(IsotropyVerdict::Degenerate(rad));
    }
    nondegenerate_part_vector(q, height_bound)
}

/// An isotropic vector outside the radical: a smooth point of the projective
/// quadric. For nondegenerate `Q` this agrees with `isotropic_vector`.
pub fn smooth_isotropic_vector(q: &QuadraticForm, height_bound: u64) -> Result<IsotropyVerdict> {
    if q.is_zero() {
        return Err(Error::Precondition("quadratic form is identically zero".into()));
    }
    nondegenerate_part_vector(q, height_bound)
}

fn nondegenerate_part_vector(q: &QuadraticForm, height_bound: u64) -> Result<IsotropyVerdict> {
    let n = q.dim();
    let (p, d) = diagonalize(q);
    let entries = diagonal_cores(&d);
    let cores: Vec<BigInt> = entries.iter().map(|(_, c, _)| c.clone()).collect();
    if let Some(place) = hilbert::local_obstruction(&cores) {
        return Ok(IsotropyVerdict::Anisotropic(place));
    }
    if let Some(x) = small_zero(q) {
        return Ok(IsotropyVerdict::Isotropic(x));
    }
    let found = match legendre::diagonal_zero(&cores) {
        Some(w) => w,
        None => enumerate_diagonal_zero(&cores, height_bound)?,
    };
    let mut y = vec![Rat::zero(); n];
    for ((i, _, r), w) in entries.iter().zip(found) {
        y[*i] = Rat::from_integer(w) / r;
    }
    let x = normalize_projective(&p.mul_vec(&y));
    if is_zero_vec(&x) || !q.eval(&x)?.is_zero() {
        return Err(Error::Invalid("isotropic witness failed verification".into()));
    }
    Ok(IsotropyVerdict::Isotropic(x))
}

// a zero of small height outside the radical, if one turns up quickly
fn small_zero(q: &QuadraticForm) -> Option<Vec<Rat>> {
    let n = q.dim();
    let sym = q.sym();
    let den = (0..n)
        .flat_map(|i| sym.row(i))
        .fold(BigInt::one(), |l, x| num_integer::Integer::lcm(&l, x.denom()));
    let m: Vec<Vec<BigInt>> = (0..n).map(|i| sym.row(i).iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect()).collect();
    let mut spent = 0usize;
    let mut found = None;
    let mut h = 1;
    while spent < SMALL_SEARCH && found.is_none() {
        for_each_of_height(n, h, &mut |v| {
            spent += 1;
            let mv: Vec<BigInt> = m.iter().map(|r| r.iter().zip(v).map(|(a, &x)| a * x).sum()).collect();
            let s: BigInt = mv.iter().zip(v).map(|(a, &x)| a * x).sum();
            if s.is_zero() && mv.iter().any(|a| !a.is_zero()) {
                found = Some(normalize_projective(&v.iter().map(|&x| int(x)).collect::<Vec<_>>()));
                return false;
            }
            spent < SMALL_SEARCH
        });
        h += 1;
    }
    found
}

fn enumerate_diagonal_zero(c: &[BigInt], height_bound: u64) -> Result<Vec<BigInt>> {
    let n = c.len();
    let mut spent = 0usize;
    let mut found = None;
    let mut h = 1i64;
    while (h as u64) <= height_bound && spent < MAX_ENUMERATION && found.is_none() {
        for_each_of_height(n, h, &mut |v| {
            spent += 1;
            let s: BigInt = c.iter().zip(v).map(|(a, &x)| a * BigInt::from(x * x)).sum();
            if s.is_zero() {
                found = Some(v.iter().map(|&x| BigInt::from(x)).collect());
                return false;
            }
            spent < MAX_ENUMERATION
        });
        h += 1;
    }
    found.ok_or(Error::SearchExhausted((h - 1) as u64))
}

/// Residual intersection of the line through `v` in direction `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SecondIntersection {
    Point(Vec<Rat>),
    /// `B(v, w) = 0` and `Q(w) != 0`: the line is tangent at `v`, returned as is.
    Tangent(Vec<Rat>),
    LineContained,
}

/// `Q(w) v - 2 B(v, w) w`, normalized primitive.
pub fn second_intersection(q: &QuadraticForm, v: &[Rat], w: &[Rat]) -> Result<SecondIntersection> {
    if is_zero_vec(v) || !q.eval(v)?.is_zero() {
        return Err(Error::Precondition("v must be a nonzero point with Q(v) = 0".into()));
    }
    let qw = q.eval(w)?;
    let b = q.polar(v, w)?;
    if b.is_zero() {
        return Ok(if qw.is_zero() {
            SecondIntersection::LineContained
        } else {
            SecondIntersection::Tangent(primitive(v))
        });
    }
    let pt = add_vec(&scale_vec(v, &qw), &scale_vec(w, &(-int(2) * b)));
    Ok(SecondIntersection::Point(primitive(&pt)))
}

/// Up to `count` distinct rational points of `Q` avoiding every `ℓ = 0`,
/// by projection from the smooth point `v` along directions of increasing
/// height.
pub fn sample_points(
    q: &QuadraticForm,
    v: &[Rat],
    count: usize,
    avoid: &[LinearForm],
) -> Result<Vec<Vec<Rat>>> {
    let n = q.dim();
    if is_zero_vec(v) || !q.eval(v)?.is_zero() {
        return Err(Error::Precondition("v must be a nonzero point with Q(v) = 0".into()));
    }
    if is_zero_vec(&q.sym.mul_vec(v)) {
        return Err(Error::Precondition("v lies in the radical of Q".into()));
    }
    for l in avoid {
        check_dim(n, l.dim())?;
    }
    let mut out: Vec<Vec<Rat>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut tried = 0usize;
    let mut err = None;
    let mut h = 1i64;
    while out.len() < count && tried < MAX_DIRECTIONS {
        for_each_of_height(n, h, &mut |wi| {
            tried += 1;
            let w: Vec<Rat> = wi.iter().map(|&x| int(x)).collect();
            if !is_parallel(&w, v) {
                match second_intersection(q, v, &w) {
                    Ok(SecondIntersection::Point(x)) => {
                        let keep = avoid.iter().all(|l| !dot(&l.coords, &x).is_zero());
                        if keep && seen.insert(normalize_projective(&x)) {
                            out.push(x);
                        }
                    }
                    Ok(_) => {}
                    Err(e) => {
                        err = Some(e);
                        return false;
                    }
                }
            }
            out.len() < count && tried < MAX_DIRECTIONS
        });
        if let Some(e) = err {
            return Err(e);
        }
        h += 1;
    }
    if out.len() < count {
        return Err(Error::InsufficientPoints { wanted: count, found: out.len() });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rvec;

    fn qf(rows: &[&[i64]]) -> QuadraticForm {
        QuadraticForm::new(Mat::from_rows(&rows.iter().map(|r| rvec(r)).collect::<Vec<_>>())).unwrap()
    }

    fn check_diag(q: &QuadraticForm) -> (Mat, Vec<Rat>) {
        let (p, d) = diagonalize(q);
        let m = p.transpose().mul(q.sym()).mul(&p);
        for i in 0..q.dim() {
            for j in 0..q.dim() {
                let want = if i == j { d[i].clone() } else { Rat::zero() };
                assert_eq!(m[(i, j)], want);
            }
        }
        assert!(!p.det().is_zero());
        (p, d)
    }

    #[test]
    fn diagonalize_examples() {
        let (p, d) = check_diag(&QuadraticForm::diagonal(&[1, 1, -1]));
        assert_eq!(p, Mat::identity(3));
        assert_eq!(d, rvec(&[1, 1, -1]));
        let xy = QuadraticForm::from_poly(&Poly::var(2, 0).mul(&Poly::var(2, 1))).unwrap();
        let (_, d) = check_diag(&xy);
        assert!(d.iter().any(|x| x > &Rat::zero()) && d.iter().any(|x| x < &Rat::zero()));
        let (_, d) = check_diag(&QuadraticForm::diagonal(&[1, 0, 0]));
        assert_eq!(d.iter().filter(|x| x.is_zero()).count(), 2);
        check_diag(&qf(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]));
    }

    #[test]
    fn radical_examples() {
        assert!(radical(&QuadraticForm::diagonal(&[1, 2, -3])).is_empty());
        assert_eq!(radical(&QuadraticForm::diagonal(&[1, 0, 0])), vec![rvec(&[0, 1, 0]), rvec(&[0, 0, 1])]);
        let sq = qf(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]]);
        assert_eq!(radical(&sq), vec![rvec(&[1, -1, 0]), rvec(&[0, 0, 1])]);
    }

    #[test]
    fn isotropy_examples() {
        assert!(is_isotropic(&QuadraticForm::diagonal(&[1, 1, 1, 1, -1])).is_isotropic());
        assert_eq!(is_isotropic(&QuadraticForm::diagonal(&[1, 1, 1])), IsotropyVerdict::Anisotropic(Place::Real));
        assert_eq!(
            is_isotropic(&QuadraticForm::diagonal(&[1, 1, -3])),
            IsotropyVerdict::Anisotropic(Place::prime(3))
        );
        assert!(matches!(is_isotropic(&QuadraticForm::diagonal(&[1, 0])), IsotropyVerdict::Degenerate(_)));
    }

    #[test]
    fn witness_examples() {
        for d in [&[1, 1, -1][..], &[1, 1, 1, 1, -1], &[2, 3, -5], &[3, -5, 7, 11, -13, 2]] {
            let q = QuadraticForm::diagonal(d);
            let v = isotropic_vector(&q, DEFAULT_HEIGHT_BOUND).unwrap();
            let w = v.witness().unwrap();
            assert!(q.eval(w).unwrap().is_zero());
            assert_eq!(primitive(w), w.to_vec());
        }
        let q = qf(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]);
        let w = isotropic_vector(&q, DEFAULT_HEIGHT_BOUND).unwrap();
        assert!(q.eval(w.witness().unwrap()).unwrap().is_zero());
    }

    #[test]
    fn smooth_point_of_degenerate_form() {
        // (x0^2 - x1^2) with x2 free: radical e2, smooth points off it
        let q = QuadraticForm::diagonal(&[1, -1, 0]);
        let v = smooth_isotropic_vector(&q, 100).unwrap();
        let w = v.witness().unwrap();
        assert!(q.eval(w).unwrap().is_zero());
        assert!(!is_zero_vec(&q.sym().mul_vec(w)));
    }

    #[test]
    fn second_intersection_examples() {
        let q = QuadraticForm::diagonal(&[1, 1, -1]);
        let v = rvec(&[1, 0, 1]);
        assert_eq!(
            second_intersection(&q, &v, &rvec(&[0, 1, 0])).unwrap(),
            SecondIntersection::Tangent(v.clone())
        );
        assert_eq!(
            second_intersection(&q, &v, &rvec(&[0, 1, 1])).unwrap(),
            SecondIntersection::Point(rvec(&[0, 1, 1]))
        );
        assert_eq!(
            second_intersection(&q, &v, &rvec(&[1, 1, 0])).unwrap(),
            SecondIntersection::Point(rvec(&[0, -1, 1]))
        );
        assert!(second_intersection(&q, &rvec(&[1, 1, 1]), &v).is_err());
    }

    #[test]
    fn sampling_examples() {
        let q = QuadraticForm::diagonal(&[1, 1, -1]);
        let v = rvec(&[1, 0, 1]);
        let z = LinearForm::new(rvec(&[0, 0, 1]));
        let pts = sample_points(&q, &v, 2, std::slice::from_ref(&z)).unwrap();
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert!(q.eval(p).unwrap().is_zero());
            assert!(!z.eval(p).unwrap().is_zero());
        }
        let pts = sample_points(&q, &v, 5, &[]).unwrap();
        assert_eq!(pts.len(), 5);
        // every point of (x - y)(x + y) = 0 lies on one of the avoided lines
        let q = QuadraticForm::diagonal(&[1, -1]);
        let v = rvec(&[1, 1]);
        let l = LinearForm::new(rvec(&[1, -1]));
        let m = LinearForm::new(rvec(&[1, 1]));
        assert!(matches!(
            sample_points(&q, &v, 1, &[l, m]),
            Err(Error::InsufficientPoints { .. })
        ));
    }
}
