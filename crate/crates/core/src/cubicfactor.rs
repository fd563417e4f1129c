//! The null-cone cubic `x ↦ x³` as a polynomial, and its factorization
//! over ℚ.
//!
//! Linear factors are found by restricting to the coordinate planes through
//! a pivot axis: a factor `x_p + Σ a_i x_i` restricts on `span(e_p, e_i)` to
//! a linear factor of a binary cubic, so each `a_i` is minus a rational root
//! of that binary cubic. Candidates are recombined depth first and pruned by
//! exact division on coordinate subspaces. When some plane restriction
//! vanishes identically, the search is repeated after a random unimodular
//! change of variables.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmath::{
    is_parallel, is_perfect_square, normalize_projective, primitive, rational_roots, Mat, Poly, Rat,
    UniPoly,
};
use crate::nsring::IntersectionForm;
use crate::quadpoints::{diagonalize, LinearForm, QuadraticForm};

const MAX_ATTEMPTS: u64 = 64;

/// Homogeneous cubic polynomial (or zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicForm {
    poly: Poly,
}

impl CubicForm {
    pub fn new(poly: Poly) -> Result<Self> {
        if !poly.is_zero() && poly.homogeneous_degree() != Some(3) {
            return Err(Error::Invalid(format!("not a cubic form: {poly}")));
        }
        Ok(CubicForm { poly })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn eval(&self, x: &[Rat]) -> Result<Rat> {
        self.poly.eval(x)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// `Σ d_ijk x_i x_j x_k` over all ordered triples.
pub fn expand_cubic(form: &IntersectionForm) -> CubicForm {
    let n = form.rank();
    let mut p = Poly::zero(n);
    for ((i, j, k), v) in form.entries() {
        let mult = match (i == j, j == k) {
            (true, true) => 1,
            (false, false) => 6,
            _ => 3,
        };
        let mut e = vec![0u32; n];
        e[*i] += 1;
        e[*j] += 1;
        e[*k] += 1;
        p.add_term(e, Rat::from_integer(v * BigInt::from(mult)));
    }
    CubicForm { poly: p }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorShape {
    IrreducibleOverQ,
    LinearTimesQuadric(LinearForm, QuadraticForm),
    ThreeLinear(LinearForm, LinearForm, LinearForm),
    /// `L1² · L2`
    LinearSquareTimesLinear(LinearForm, LinearForm),
    LinearCube(LinearForm),
}

/// `F = scalar · (product of the factors)`; the scalar is 1 for
/// irreducible forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub shape: FactorShape,
    pub scalar: Rat,
}

impl Factorization {
    pub fn is_irreducible(&self) -> bool {
        self.shape == FactorShape::IrreducibleOverQ
    }

    /// Linear factors with repetition.
    pub fn linear_factors(&self) -> Vec<&LinearForm> {
        match &self.shape {
            FactorShape::IrreducibleOverQ => vec![],
            FactorShape::LinearTimesQuadric(l, _) => vec![l],
            FactorShape::ThreeLinear(a, b, c) => vec![a, b, c],
            FactorShape::LinearSquareTimesLinear(a, b) => vec![a, a, b],
            FactorShape::LinearCube(l) => vec![l, l, l],
        }
    }

    /// The product, or `None` for an irreducible form.
    pub fn product(&self) -> Option<Poly> {
        let mut p = match &self.shape {
            FactorShape::IrreducibleOverQ => return None,
            FactorShape::LinearTimesQuadric(l, q) => l.to_poly().mul(&q.to_poly()),
            _ => {
                let ls = self.linear_factors();
                ls[0].to_poly().mul(&ls[1].to_poly()).mul(&ls[2].to_poly())
            }
        };
        p = p.scale(&self.scalar);
        Some(p)
    }

    pub fn name(&self) -> &'static str {
        match self.shape {
            FactorShape::IrreducibleOverQ => "IrreducibleOverQ",
            FactorShape::LinearTimesQuadric(..) => "LinearTimesQuadric",
            FactorShape::ThreeLinear(..) => "ThreeLinear",
            FactorShape::LinearSquareTimesLinear(..) => "LinearSquareTimesLinear",
            FactorShape::LinearCube(..) => "LinearCube",
        }
    }
}

/// Record of a linear-factor search in the original coordinates.
#[derive(Clone, Debug)]
pub struct LinearSearch {
    pub factor: Option<LinearForm>,
    /// Every complete candidate that was test-divided.
    pub tried: Vec<LinearForm>,
    pub attempts: u64,
}

/// Search for a linear factor of `F` over ℚ. `factor == None` is a proof
/// that none exists.
pub fn find_linear_factor(f: &CubicForm, seed: u64) -> Result<LinearSearch> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tried = Vec::new();
    for attempt in 0..MAX_ATTEMPTS {
        let a = if attempt == 0 { Mat::identity(n) } else { random_unimodular(n, &mut rng) };
        let a_inv = a.inverse().expect("unimodular");
        let g = transform(f.poly(), &a);
        let mut pivots: Vec<usize> = (0..n).collect();
        pivots.rotate_left((seed % n as u64) as usize);
        let mut complete = true;
        for &p in &pivots {
            let mut local = Vec::new();
            match search_pivot(&g, p, &mut local) {
                PivotResult::Found(l) => {
                    tried.extend(local.iter().map(|c| back(c, &a_inv)));
                    let lf = back(&l, &a_inv);
                    if f.poly().exact_divide(&lf.to_poly())?.is_none() {
                        return Err(Error::Invalid("linear factor failed verification".into()));
                    }
                    return Ok(LinearSearch { factor: Some(lf), tried, attempts: attempt + 1 });
                }
                PivotResult::Exhausted => {}
                PivotResult::Incomplete => complete = false,
            }
            tried.extend(local.iter().map(|c| back(c, &a_inv)));
        }
        if complete {
            return Ok(LinearSearch { factor: None, tried, attempts: attempt + 1 });
        }
    }
    Err(Error::SearchExhausted(MAX_ATTEMPTS))
}

// coefficient vector l' of a factor of F∘A maps to l = A^{-T} l'
fn back(l: &[Rat], a_inv: &Mat) -> LinearForm {
    LinearForm::new(normalize_projective(&a_inv.transpose().mul_vec(l)))
}

fn transform(f: &Poly, a: &Mat) -> Poly {
    let n = f.nvars();
    let images: Vec<Poly> = (0..n).map(|i| Poly::linear(&a.row(i))).collect();
    f.compose(&images)
}

fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Mat {
    let mut m = Mat::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let k = Rat::from_integer(BigInt::from(rng.gen_range(-2i64..=2)));
        // column i += k column j
        for r in 0..n {
            let d = &k * &m[(r, j)];
            m[(r, i)] += d;
        }
    }
    m
}

enum PivotResult {
    Found(Vec<Rat>),
    Exhausted,
    Incomplete,
}

// Binary cubic F(s e_p + e_i) as a polynomial in s.
fn plane_restriction(f: &Poly, p: usize, i: usize) -> UniPoly {
    let mut c = vec![Rat::zero(); 4];
    for (e, v) in f.terms() {
        if e.iter().enumerate().all(|(k, &x)| x == 0 || k == p || k == i) {
            c[e[p] as usize] += v;
        }
    }
    UniPoly::new(c)
}

fn search_pivot(f: &Poly, p: usize, tried: &mut Vec<Vec<Rat>>) -> PivotResult {
    let n = f.nvars();
    let others: Vec<usize> = (0..n).filter(|&i| i != p).collect();
    let mut cands: Vec<Vec<Rat>> = Vec::new();
    for &i in &others {
        let g = plane_restriction(f, p, i);
        if g.is_zero() {
            return PivotResult::Incomplete;
        }
        let roots = rational_roots(&g).expect("nonzero");
        cands.push(roots.into_iter().map(|(r, _)| -r).collect());
    }
    // depth-first over the coordinate subspaces {p, others[..k]}
    let mut partial: Vec<Vec<Rat>> = vec![vec![]];
    for k in 0..others.len() {
        let mut keep: Vec<usize> = vec![p];
        keep.extend(&others[..=k]);
        keep.sort();
        let sub = f.restrict_to_coordinates(&keep);
        let mut next = Vec::new();
        for base in &partial {
            for a in &cands[k] {
                let mut ext = base.clone();
                ext.push(a.clone());
                if sub.is_zero() || divides_restricted(&sub, &keep, p, &others[..=k], &ext) {
                    next.push(ext);
                }
            }
        }
        if next.is_empty() {
            return PivotResult::Exhausted;
        }
        partial = next;
    }
    for coeffs in partial {
        let mut l = vec![Rat::zero(); n];
        l[p] = Rat::one();
        for (&i, a) in others.iter().zip(&coeffs) {
            l[i] = a.clone();
        }
        tried.push(l.clone());
        if f.exact_divide(&Poly::linear(&l)).expect("nonzero").is_some() {
            return PivotResult::Found(l);
        }
    }
    PivotResult::Exhausted
}

fn divides_restricted(sub: &Poly, keep: &[usize], p: usize, idx: &[usize], coeffs: &[Rat]) -> bool {
    let mut l = vec![Rat::zero(); keep.len()];
    for (slot, &var) in keep.iter().enumerate() {
        if var == p {
            l[slot] = Rat::one();
        } else if let Some(pos) = idx.iter().position(|&x| x == var) {
            l[slot] = coeffs[pos].clone();
        }
    }
    sub.exact_divide(&Poly::linear(&l)).expect("nonzero").is_some()
}

/// Factorization of a cubic form over ℚ. The seed only orders pivots and
/// picks the random changes of variables used for degenerate pivots.
pub fn factor_over_q(f: &CubicForm, seed: u64) -> Result<Factorization> {
    let search = find_linear_factor(f, seed)?;
    let Some(l1) = search.factor else {
        return Ok(Factorization { shape: FactorShape::IrreducibleOverQ, scalar: Rat::one() });
    };
    let q = f.poly().exact_divide(&l1.to_poly())?.expect("verified factor");
    let qf = QuadraticForm::from_poly(&q)?;
    let shape = match factor_quadratic_form(&qf)? {
        QuadraticFactorization::IrreducibleOverQ => {
            let (qn, _) = normalize_quadric(&qf);
            FactorShape::LinearTimesQuadric(l1, qn)
        }
        QuadraticFactorization::ProductOfTwoLinear(l2, l3) => {
            let mut ls = [l1, l2, l3];
            ls.sort();
            let [a, b, c] = ls;
            match (is_parallel(&a.coords, &b.coords), is_parallel(&b.coords, &c.coords), is_parallel(&a.coords, &c.coords)) {
                (true, true, _) => FactorShape::LinearCube(a),
                (true, false, _) => FactorShape::LinearSquareTimesLinear(a, c),
                (false, true, _) => FactorShape::LinearSquareTimesLinear(b, a),
                (false, false, true) => FactorShape::LinearSquareTimesLinear(a, b),
                _ => FactorShape::ThreeLinear(a, b, c),
            }
        }
    };
    let mut out = Factorization { shape, scalar: Rat::one() };
    out.scalar = scalar_between(f.poly(), &out.product().expect("reducible"))?;
    Ok(out)
}

// the rational c with f = c g, checked exactly
fn scalar_between(f: &Poly, g: &Poly) -> Result<Rat> {
    let (e, c) = g.leading_term().ok_or(Error::ZeroPolynomial)?;
    let s = f.coeff(e) / c;
    if g.scale(&s) != *f {
        return Err(Error::Invalid("factorization failed the product check".into()));
    }
    Ok(s)
}

// primitive integral Gram-coefficient multiple with positive leading
// coefficient, and the scalar absorbed
fn normalize_quadric(q: &QuadraticForm) -> (QuadraticForm, Rat) {
    let p = q.to_poly();
    let coeffs: Vec<Rat> = p.terms().map(|(_, c)| c.clone()).collect();
    let mut prim = primitive(&coeffs);
    let lead = p.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false);
    if lead {
        for c in &mut prim {
            *c = -c.clone();
        }
    }
    let s = coeffs
        .iter()
        .zip(&prim)
        .find(|(c, _)| !c.is_zero())
        .map(|(c, p)| c / p)
        .unwrap_or_else(Rat::one);
    let scaled = p.scale(&(Rat::one() / &s));
    (QuadraticForm::from_poly(&scaled).expect("quadratic"), s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadraticFactorization {
    /// Primitive factors; their product is a rational multiple of `Q`.
    ProductOfTwoLinear(LinearForm, LinearForm),
    IrreducibleOverQ,
}

/// Splitting of a quadratic form into two rational linear forms.
pub fn factor_quadratic_form(q: &QuadraticForm) -> Result<QuadraticFactorization> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = q.dim();
    let (p, d) = diagonalize(q);
    let nz: Vec<usize> = (0..n).filter(|&i| !d[i].is_zero()).collect();
    // y = P^{-1} x are the diagonal coordinates
    let pinv = p.inverse().expect("invertible");
    let out = match nz.as_slice() {
        [i] => {
            let l = LinearForm::new(pinv.row(*i)).normalized();
            QuadraticFactorization::ProductOfTwoLinear(l.clone(), l)
        }
        [i, j] => match is_perfect_square(&-(&d[*j] / &d[*i])) {
            // d_i y_i^2 + d_j y_j^2 = d_i (y_i - r y_j)(y_i + r y_j)
            Some(r) => {
                let yi = pinv.row(*i);
                let yj = pinv.row(*j);
                let l1: Vec<Rat> = yi.iter().zip(&yj).map(|(a, b)| a - &r * b).collect();
                let l2: Vec<Rat> = yi.iter().zip(&yj).map(|(a, b)| a + &r * b).collect();
                let mut ls = [LinearForm::new(l1).normalized(), LinearForm::new(l2).normalized()];
                ls.sort();
                let [a, b] = ls;
                QuadraticFactorization::ProductOfTwoLinear(a, b)
            }
            None => QuadraticFactorization::IrreducibleOverQ,
        },
        _ => QuadraticFactorization::IrreducibleOverQ,
    };
    if let QuadraticFactorization::ProductOfTwoLinear(a, b) = &out {
        scalar_between(&q.to_poly(), &a.to_poly().mul(&b.to_poly()))?;
    }
    Ok(out)
}

/// `F = c L³` with `L` primitive and positive-leading; returns `(L, c)`.
pub fn is_perfect_cube_linear(f: &CubicForm) -> Option<(LinearForm, Rat)> {
    let n = f.nvars();
    let p = (0..n).find(|&i| {
        let mut e = vec![0; n];
        e[i] = 3;
        !f.poly().coeff(&e).is_zero()
    })?;
    let mut e = vec![0; n];
    e[p] = 3;
    let c = f.poly().coeff(&e);
    let three = Rat::from_integer(BigInt::from(3));
    let l: Vec<Rat> = (0..n)
        .map(|i| {
            if i == p {
                return Rat::one();
            }
            let mut e = vec![0; n];
            e[p] = 2;
            e[i] = 1;
            f.poly().coeff(&e) / (&three * &c)
        })
        .collect();
    let lp = Poly::linear(&l);
    if lp.pow(3).scale(&c) != *f.poly() {
        return None;
    }
    let ln = LinearForm::new(normalize_projective(&l));
    let s = scalar_between(f.poly(), &ln.to_poly().pow(3)).ok()?;
    Some((ln, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rvec};

    fn var(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn lin(c: &[i64]) -> LinearForm {
        LinearForm::new(rvec(c))
    }

    fn cubic(p: Poly) -> CubicForm {
        CubicForm::new(p).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let f = IntersectionForm::from_entries(2, &[(0, 0, 1, 1)]).unwrap();
        assert_eq!(expand_cubic(&f).poly().to_string(), "3*x0^2*x1");
        let f = IntersectionForm::diagonal(&[1, 1, -2]);
        let want = var(3, 0).pow(3).add(&var(3, 1).pow(3)).sub(&var(3, 2).pow(3).scale(&int(2)));
        assert_eq!(expand_cubic(&f).poly(), &want);
        let f = IntersectionForm::from_entries(3, &[(0, 1, 2, 1)]).unwrap();
        assert_eq!(expand_cubic(&f).poly(), &var(3, 0).mul(&var(3, 1)).mul(&var(3, 2)).scale(&int(6)));
    }

    #[test]
    fn factor_examples() {
        let x = |i| var(3, i);
        let f = cubic(x(0).pow(3).sub(&x(0).mul(&x(2).pow(2))));
        let fac = factor_over_q(&f, 0).unwrap();
        assert_eq!(fac.shape, FactorShape::ThreeLinear(lin(&[1, 0, -1]), lin(&[1, 0, 0]), lin(&[1, 0, 1])));
        assert_eq!(fac.product().unwrap(), *f.poly());

        let f = cubic(x(0).mul(&x(0).pow(2).add(&x(1).pow(2)).add(&x(2).pow(2))));
        let fac = factor_over_q(&f, 0).unwrap();
        match &fac.shape {
            FactorShape::LinearTimesQuadric(l, q) => {
                assert_eq!(l, &lin(&[1, 0, 0]));
                assert_eq!(q, &QuadraticForm::diagonal(&[1, 1, 1]));
            }
            other => panic!("{other:?}"),
        }

        let f = cubic(x(0).pow(3).add(&x(1).pow(3)).add(&x(2).pow(3)));
        assert!(factor_over_q(&f, 0).unwrap().is_irreducible());
        assert!(factor_over_q(&cubic(Poly::zero(3)), 0).is_err());
    }

    #[test]
    fn degenerate_planes_trigger_a_change_of_variables() {
        let x = |i| var(4, i);
        let f = cubic(x(0).mul(&x(1)).mul(&x(2)).scale(&int(6)));
        let fac = factor_over_q(&f, 3).unwrap();
        assert_eq!(fac.name(), "ThreeLinear");
        assert_eq!(fac.product().unwrap(), *f.poly());
        // x0 x1 x2 + x3^3 has no linear factor, but every coordinate plane
        // through e0 restricts to zero or a pure cube
        let f = cubic(x(0).mul(&x(1)).mul(&x(2)).add(&x(3).pow(3)));
        assert!(factor_over_q(&f, 1).unwrap().is_irreducible());
    }

    #[test]
    fn repeated_factors() {
        let x = |i| var(3, i);
        let l = x(0).add(&x(1).scale(&int(2)));
        let f = cubic(l.pow(2).mul(&x(2)).scale(&int(-5)));
        let fac = factor_over_q(&f, 0).unwrap();
        assert_eq!(fac.shape, FactorShape::LinearSquareTimesLinear(lin(&[1, 2, 0]), lin(&[0, 0, 1])));
        assert_eq!(fac.scalar, int(-5));
        let f = cubic(l.pow(3).scale(&int(4)));
        let fac = factor_over_q(&f, 0).unwrap();
        assert_eq!(fac.shape, FactorShape::LinearCube(lin(&[1, 2, 0])));
        assert_eq!(fac.scalar, int(4));
    }

    #[test]
    fn quadratic_examples() {
        let q = QuadraticForm::diagonal(&[1, -1]);
        assert_eq!(
            factor_quadratic_form(&q).unwrap(),
            QuadraticFactorization::ProductOfTwoLinear(lin(&[1, -1]), lin(&[1, 1]))
        );
        assert_eq!(factor_quadratic_form(&QuadraticForm::diagonal(&[1, 1])).unwrap(), QuadraticFactorization::IrreducibleOverQ);
        assert_eq!(factor_quadratic_form(&QuadraticForm::diagonal(&[1, 1, 1])).unwrap(), QuadraticFactorization::IrreducibleOverQ);
        assert!(factor_quadratic_form(&QuadraticForm::diagonal(&[0, 0])).is_err());
    }

    #[test]
    fn cube_examples() {
        let x = |i| var(2, i);
        let f = cubic(x(0).add(&x(1)).pow(3));
        assert_eq!(is_perfect_cube_linear(&f), Some((lin(&[1, 1]), int(1))));
        let f = cubic(x(0).pow(3).scale(&int(8)));
        assert_eq!(is_perfect_cube_linear(&f), Some((lin(&[1, 0]), int(8))));
        assert_eq!(is_perfect_cube_linear(&cubic(x(0).pow(3).add(&x(1).pow(3)))), None);
        assert_eq!(is_perfect_cube_linear(&cubic(Poly::zero(2))), None);
    }
}
