//! Exact arithmetic: rationals, sparse polynomials, univariate root
//! extraction, linear algebra over the rationals and a little elementary
//! number theory.
//!
//! Nothing in this crate touches floating point. Every zero test downstream
//! depends on canonical rationals, which `BigRational` maintains after each
//! operation.

mod linalg;
pub mod ntheory;
mod poly;
mod upoly;

pub use linalg::{kernel_basis, Mat};
pub use poly::Poly;
pub use upoly::{rational_roots, rational_roots_cubic, UniPoly};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rvec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| int(x)).collect()
}

/// Parse `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_rat(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact non-negative square root of `q` when `q` is the square of a rational.
pub fn is_perfect_square(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(Rat::new(n, d))
}

pub(crate) fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Max absolute value of the entries of the primitive integral multiple.
pub fn height(v: &[Rat]) -> BigInt {
    primitive(v)
        .iter()
        .map(|x| x.numer().abs())
        .max()
        .unwrap_or_default()
}

/// Clear denominators and divide by the (positive) content. Signs are kept.
pub fn primitive(v: &[Rat]) -> Vec<Rat> {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect()
}

/// Primitive integral representative with positive leading nonzero entry.
pub fn normalize_projective(v: &[Rat]) -> Vec<Rat> {
    let mut p = primitive(v);
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut p {
            *x = -x.clone();
        }
    }
    p
}

/// Whether `a` and `b` span a line (both nonzero and proportional).
pub fn is_parallel(a: &[Rat], b: &[Rat]) -> bool {
    if is_zero_vec(a) || is_zero_vec(b) {
        return false;
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

pub fn scale_vec(v: &[Rat], s: &Rat) -> Vec<Rat> {
    v.iter().map(|x| x * s).collect()
}

pub fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Unit vector `e_i` of length `n`.
pub fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// Ordering of the integers 0, 1, -1, 2, -2, ...
pub fn zigzag_key(x: &BigInt) -> (BigInt, bool) {
    (x.abs(), x.is_negative())
}

/// Integer vectors of exact height `h` in zigzag-lexicographic order.
/// `visit` returns `false` to stop the enumeration early.
pub fn for_each_of_height(n: usize, h: i64, visit: &mut dyn FnMut(&[i64]) -> bool) -> bool {
    fn digits(h: i64) -> Vec<i64> {
        let mut d = vec![0];
        for k in 1..=h {
            d.push(k);
            d.push(-k);
        }
        d
    }
    fn rec(
        buf: &mut Vec<i64>,
        n: usize,
        h: i64,
        ds: &[i64],
        hit: bool,
        visit: &mut dyn FnMut(&[i64]) -> bool,
    ) -> bool {
        if buf.len() == n {
            return if hit { visit(buf) } else { true };
        }
        for &d in ds {
            // the remaining slots must still be able to reach height h
            let will_hit = hit || d.abs() == h;
            if !will_hit && buf.len() + 1 == n {
                continue;
            }
            buf.push(d);
            let go = rec(buf, n, h, ds, will_hit, visit);
            buf.pop();
            if !go {
                return false;
            }
        }
        true
    }
    if h == 0 {
        return visit(&vec![0; n]);
    }
    let ds = digits(h);
    rec(&mut Vec::with_capacity(n), n, h, &ds, false, visit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_squares() {
        assert_eq!(is_perfect_square(&int(0)), Some(int(0)));
        assert_eq!(is_perfect_square(&int(24)), None);
        assert_eq!(is_perfect_square(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(is_perfect_square(&int(-4)), None);
        assert_eq!(is_perfect_square(&rat(2, 9)), None);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat(" 7 ").unwrap(), int(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(fmt_rat(&rat(-3, 2)), "-3/2");
        assert_eq!(fmt_rat(&int(5)), "5");
    }

    #[test]
    fn primitive_keeps_sign() {
        assert_eq!(primitive(&rvec(&[-3, 9, 3, -6])), rvec(&[-1, 3, 1, -2]));
        assert_eq!(normalize_projective(&rvec(&[-3, 0, 3])), rvec(&[1, 0, -1]));
        assert_eq!(primitive(&[rat(1, 2), rat(-1, 3)]), rvec(&[3, -2]));
    }

    #[test]
    fn height_enumeration_is_complete() {
        let mut seen = Vec::new();
        for_each_of_height(2, 1, &mut |v| {
            seen.push(v.to_vec());
            true
        });
        assert_eq!(seen.len(), 8);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[1], vec![0, -1]);
        assert_eq!(seen[2], vec![1, 0]);
        let mut count = 0;
        for_each_of_height(3, 2, &mut |v| {
            assert_eq!(v.iter().map(|x| x.abs()).max(), Some(2));
            count += 1;
            true
        });
        assert_eq!(count, 5usize.pow(3) - 3usize.pow(3));
    }
}
