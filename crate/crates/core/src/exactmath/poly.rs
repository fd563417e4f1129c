use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{check_dim, Error, Result};

/// Sparse polynomial over the rationals, keyed by exponent vector.
///
/// Keys compare lexicographically, so the last entry of `terms` is the
/// leading term for the lex order `x0 > x1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The monomial `c * x^exps`.
    pub fn monomial(exps: Vec<u32>, c: Rat) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, Rat::one())
    }

    /// The linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Whether `x_i` occurs in some term.
    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    pub fn eval(&self, x: &[Rat]) -> Result<Rat> {
        check_dim(self.nvars, x.len())?;
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::constant(self.nvars, Rat::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient `f / g`, or `Ok(None)` when `g` does not divide `f`.
    pub fn exact_divide(&self, g: &Poly) -> Result<Option<Poly>> {
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        check_dim(self.nvars, g.nvars)?;
        let (ge, gc) = g.leading_term().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading_term() {
            if re.iter().zip(ge).any(|(a, b)| a < b) {
                return Ok(None);
            }
            let e: Vec<u32> = re.iter().zip(ge).map(|(a, b)| a - b).collect();
            let c = rc / gc;
            let t = Poly::monomial(e, c);
            rem = rem.sub(&t.mul(g));
            quot = quot.add(&t);
        }
        Ok(Some(quot))
    }

    /// Substitute `x_i = images[i]`, where every image lives in `m` variables.
    pub fn compose(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let m = images.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(m, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&img.pow(k));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Pull back along `y -> sum_j y_j * basis[j]`; the result has
    /// `basis.len()` variables.
    pub fn restrict_to_span(&self, basis: &[Vec<Rat>]) -> Poly {
        let m = basis.len();
        let images: Vec<Poly> = (0..self.nvars)
            .map(|i| {
                let coeffs: Vec<Rat> = basis.iter().map(|b| b[i].clone()).collect();
                let mut p = Poly::linear(&coeffs);
                p.nvars = m;
                p
            })
            .collect();
        self.compose(&images)
    }

    /// Set every variable outside `keep` to zero and renumber the rest.
    pub fn restrict_to_coordinates(&self, keep: &[usize]) -> Poly {
        let mut out = Poly::zero(keep.len());
        for (e, c) in &self.terms {
            let dropped = (0..self.nvars).any(|i| e[i] > 0 && !keep.contains(&i));
            if !dropped {
                out.add_term(keep.iter().map(|&i| e[i]).collect(), c.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * Rat::from_integer(e[i].into()));
            }
        }
        out
    }

    /// Coefficients of a linear form (`None` unless homogeneous of degree 1).
    pub fn linear_coeffs(&self) -> Option<Vec<Rat>> {
        if self.homogeneous_degree() != Some(1) {
            return None;
        }
        Some(
            (0..self.nvars)
                .map(|i| {
                    let mut e = vec![0; self.nvars];
                    e[i] = 1;
                    self.coeff(&e)
                })
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let is_const = e.iter().all(|&k| k == 0);
            if !a.is_one() || is_const {
                write!(f, "{}", super::fmt_rat(&a))?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut fac = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => fac.push(format!("x{i}")),
                    _ => fac.push(format!("x{i}^{k}")),
                }
            }
            write!(f, "{}", fac.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat, rvec};

    fn p(n: usize, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), int(*c))))
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(1, &[(&[3], 1)]).eval(&rvec(&[2])).unwrap(), int(8));
        let f = p(3, &[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 3], -2)]);
        assert_eq!(f.eval(&rvec(&[1, 1, 1])).unwrap(), int(0));
        let g = p(2, &[(&[2, 1], 3)]);
        assert_eq!(g.eval(&[rat(1, 2), int(4)]).unwrap(), int(3));
        assert!(g.eval(&rvec(&[1])).is_err());
    }

    #[test]
    fn exact_division_examples() {
        let f = p(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        let g = p(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(f.exact_divide(&g).unwrap(), Some(p(2, &[(&[1, 0], 1), (&[0, 1], 1)])));

        let f = p(2, &[(&[3, 0], 1), (&[0, 3], 1)]);
        let g = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let q = p(2, &[(&[2, 0], 1), (&[1, 1], -1), (&[0, 2], 1)]);
        assert_eq!(f.exact_divide(&g).unwrap(), Some(q));

        let g = p(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(f.exact_divide(&g).unwrap(), None);
        assert_eq!(f.exact_divide(&Poly::zero(2)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn restriction_and_derivative() {
        // x0^3 + x1^3 restricted to the line t*(1,-1) vanishes
        let f = p(2, &[(&[3, 0], 1), (&[0, 3], 1)]);
        assert!(f.restrict_to_span(&[rvec(&[1, -1])]).is_zero());
        assert_eq!(f.derivative(0), p(2, &[(&[2, 0], 3)]));
        let g = p(3, &[(&[1, 1, 1], 6)]);
        assert!(g.restrict_to_coordinates(&[0, 1]).is_zero());
        assert_eq!(format!("{}", f), "x0^3 + x1^3");
    }
}
