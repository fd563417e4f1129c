use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::ntheory::{legendre, prime_divisors, squarefree_decomposition, valuation};
use crate::exactmath::Rat;

/// A place of ℚ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Real,
    Prime(BigInt),
}

impl Place {
    pub fn prime(p: i64) -> Self {
        Place::Prime(BigInt::from(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Prime(p) => write!(f, "p={p}"),
        }
    }
}

/// Hilbert symbol `(a, b)_v` for nonzero rationals.
pub fn hilbert_symbol(a: &Rat, b: &Rat, place: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroHilbertArgument);
    }
    // a rational and numer * denom differ by the square denom^2
    let a = a.numer() * a.denom();
    let b = b.numer() * b.denom();
    Ok(hilbert_int(&a, &b, place))
}

pub(crate) fn hilbert_int(a: &BigInt, b: &BigInt, place: &Place) -> i8 {
    match place {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) if p == &BigInt::from(2) => {
            let (alpha, u) = valuation(a, p);
            let (beta, v) = valuation(b, p);
            let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = valuation(a, p);
            let (beta, v) = valuation(b, p);
            let ep: u32 = if ((p - 1u32) / 2u32).is_even() { 0 } else { 1 };
            let mut s: i32 = if (alpha * beta * ep).is_multiple_of(2) { 1 } else { -1 };
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&v, p);
            }
            s as i8
        }
    }
}

// (u - 1) / 2 mod 2 for odd u
fn eps(u: &BigInt) -> u32 {
    if u.mod_floor(&BigInt::from(4)).is_one() {
        0
    } else {
        1
    }
}

// (u^2 - 1) / 8 mod 2 for odd u
fn omega(u: &BigInt) -> u32 {
    let r = u.mod_floor(&BigInt::from(8));
    if r == BigInt::from(1) || r == BigInt::from(7) {
        0
    } else {
        1
    }
}

/// Whether the nonzero integer `d` is a square in ℚ_v.
pub(crate) fn is_local_square(d: &BigInt, place: &Place) -> bool {
    match place {
        Place::Real => d.is_positive(),
        Place::Prime(p) => {
            let (v, u) = valuation(d, p);
            if v % 2 == 1 {
                return false;
            }
            if p == &BigInt::from(2) {
                u.mod_floor(&BigInt::from(8)).is_one()
            } else {
                legendre(&u, p) == 1
            }
        }
    }
}

/// The real place, odd primes dividing the product in increasing order,
/// then 2.
pub(crate) fn relevant_places(coeffs: &[BigInt]) -> Vec<Place> {
    let mut primes = std::collections::BTreeSet::new();
    for c in coeffs {
        primes.extend(prime_divisors(c));
    }
    let two = BigInt::from(2);
    primes.remove(&two);
    let mut out = vec![Place::Real];
    out.extend(primes.into_iter().map(Place::Prime));
    out.push(Place::Prime(two));
    out
}

/// Isotropy over ℚ_v of the diagonal form with nonzero integer entries.
pub(crate) fn locally_isotropic(a: &[BigInt], place: &Place) -> bool {
    let minus = |x: BigInt| -x;
    match a.len() {
        0 | 1 => false,
        2 => is_local_square(&minus(&a[0] * &a[1]), place),
        3 => hilbert_int(&minus(&a[0] * &a[2]), &minus(&a[1] * &a[2]), place) == 1,
        4 => {
            let d: BigInt = a.iter().product();
            if !is_local_square(&d, place) {
                return true;
            }
            let mut e = 1i8;
            for i in 0..4 {
                for j in i + 1..4 {
                    e *= hilbert_int(&a[i], &a[j], place);
                }
            }
            e == hilbert_int(&BigInt::from(-1), &BigInt::from(-1), place)
        }
        _ => match place {
            Place::Real => a.iter().any(Signed::is_positive) && a.iter().any(Signed::is_negative),
            Place::Prime(_) => true,
        },
    }
}

/// First place where the diagonal form is anisotropic, if any.
pub(crate) fn local_obstruction(a: &[BigInt]) -> Option<Place> {
    if a.len() >= 5 {
        return (!locally_isotropic(a, &Place::Real)).then_some(Place::Real);
    }
    let cores: Vec<BigInt> = a.iter().map(|x| squarefree_decomposition(x).0).collect();
    relevant_places(&cores)
        .into_iter()
        .find(|v| !locally_isotropic(&cores, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn symbol_examples() {
        assert_eq!(hilbert_symbol(&int(1), &int(7), &Place::prime(7)).unwrap(), 1);
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), &Place::Real).unwrap(), -1);
        assert_eq!(hilbert_symbol(&int(2), &int(3), &Place::prime(3)).unwrap(), -1);
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), &Place::prime(2)).unwrap(), -1);
        assert_eq!(hilbert_symbol(&int(2), &int(5), &Place::prime(2)).unwrap(), -1);
        assert!(hilbert_symbol(&int(0), &int(1), &Place::Real).is_err());
    }

    #[test]
    fn ternary_obstructions() {
        assert_eq!(local_obstruction(&[b(1), b(1), b(1)]), Some(Place::Real));
        assert_eq!(local_obstruction(&[b(1), b(1), b(-3)]), Some(Place::prime(3)));
        assert_eq!(local_obstruction(&[b(1), b(1), b(-2)]), None);
        assert_eq!(local_obstruction(&[b(1), b(1), b(1), b(1), b(-1)]), None);
        assert_eq!(local_obstruction(&[b(1), b(1), b(1), b(1), b(1)]), Some(Place::Real));
    }

    #[test]
    fn quaternary_examples() {
        // 4^k (8m + 7) is never a sum of three squares
        assert_eq!(local_obstruction(&[b(1), b(1), b(1), b(-7)]), Some(Place::prime(2)));
        assert_eq!(local_obstruction(&[b(1), b(1), b(2), b(-15)]), None);
        // norm form of the quaternions: definite
        assert_eq!(local_obstruction(&[b(1), b(1), b(1), b(1)]), Some(Place::Real));
        // the norm form of a quaternion algebra, checked against a brute force
        let a = [b(1), b(-2), b(-3), b(6)];
        let brute = (|| {
            for x in -12i64..=12 {
                for y in -12i64..=12 {
                    for z in -12i64..=12 {
                        for w in -12i64..=12 {
                            if (x, y, z, w) != (0, 0, 0, 0)
                                && x * x - 2 * y * y - 3 * z * z + 6 * w * w == 0
                            {
                                return true;
                            }
                        }
                    }
                }
            }
            false
        })();
        assert_eq!(local_obstruction(&a).is_none(), brute);
    }
}
