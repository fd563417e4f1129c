use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients from the constant term up.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: &Rat) -> Self {
        UniPoly::new(vec![-r.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rat::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, s: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lc;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&(Rat::one() / lc)),
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Rat) -> u32 {
        if self.is_zero() {
            return u32::MAX;
        }
        let lin = UniPoly::linear_root(r);
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, rem) = p.div_rem(&lin);
            if !rem.is_zero() {
                return m;
            }
            m += 1;
            p = q;
        }
    }

    /// Integer multiple with coprime integer coefficients.
    fn primitive_integral(&self) -> Vec<BigInt> {
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }
}

/// All rational roots with multiplicity, in increasing order.
///
/// The square-free part is rescaled to a monic integer polynomial whose
/// rational roots are integers; those are isolated by Sturm-sequence
/// bisection over half-integer endpoints.
pub fn rational_roots(f: &UniPoly) -> Result<Vec<(Rat, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sqfree = f.div_rem(&f.gcd(&f.derivative())).0;
    let g = UniPoly::new(sqfree.primitive_integral().into_iter().map(Rat::from_integer).collect());
    let d = g.degree().unwrap();
    let lead = g.leading().unwrap().to_integer();
    // h(u) = lead^(d-1) * g(u / lead) is monic with integer coefficients
    let mut h = Vec::with_capacity(d + 1);
    for (i, c) in g.coeffs.iter().enumerate() {
        if i == d {
            h.push(Rat::one());
            break;
        }
        let mut v = c.to_integer();
        for _ in 0..d - 1 - i {
            v *= &lead;
        }
        h.push(Rat::from_integer(v));
    }
    let h = UniPoly::new(h);
    let bound: BigInt = h
        .coeffs
        .iter()
        .map(|c| c.abs().to_integer())
        .max()
        .unwrap_or_default()
        + 1;
    let sturm = sturm_sequence(&h);
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        // integers lo..=hi, probed at lo - 1/2 and hi + 1/2
        let a = Rat::from_integer(lo.clone()) - &half;
        let b = Rat::from_integer(hi.clone()) + &half;
        let count = sign_changes(&sturm, &a) - sign_changes(&sturm, &b);
        if count == 0 {
            continue;
        }
        if lo == hi {
            if h.eval(&Rat::from_integer(lo.clone())).is_zero() {
                roots.push(Rat::new(lo, lead.clone()));
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((mid.clone() + 1, hi));
        stack.push((lo, mid));
    }
    roots.sort();
    Ok(roots
        .into_iter()
        .map(|r| {
            let m = f.root_multiplicity(&r);
            (r, m)
        })
        .collect())
}

/// Rational roots of `a t^3 + b t^2 + c t + d` with multiplicities.
pub fn rational_roots_cubic(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Result<Vec<(Rat, u32)>> {
    rational_roots(&UniPoly::new(vec![d.clone(), c.clone(), b.clone(), a.clone()]))
}

fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1.neg();
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn sign_changes(seq: &[UniPoly], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}
