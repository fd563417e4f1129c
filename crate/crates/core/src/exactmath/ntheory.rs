//! Elementary number theory on `BigInt`: factorization, square classes,
//! Legendre symbols and modular square roots.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rat;

const SMALL_LIMIT: u32 = 10_000;

fn small_primes() -> &'static [u32] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = SMALL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..=n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
    })
}

/// Deterministic for n < 3.3e24, probabilistic beyond with fixed bases.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &p in small_primes().iter().take(50) {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y) = (BigInt::from(2), BigInt::from(2));
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of `|n|` (n nonzero) as prime -> exponent.
pub fn factor(n: &BigInt) -> BTreeMap<BigInt, u32> {
    assert!(!n.is_zero(), "factor(0)");
    let mut out = BTreeMap::new();
    let mut m = n.abs();
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            break;
        }
        while (&m % &pb).is_zero() {
            m /= &pb;
            *out.entry(pb.clone()).or_insert(0) += 1;
        }
    }
    let mut stack = vec![m];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_brent(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out
}

pub fn prime_divisors(n: &BigInt) -> Vec<BigInt> {
    factor(n).into_keys().collect()
}

/// Exponent of `p` in nonzero `n`, and `n / p^v`.
pub fn valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    assert!(!n.is_zero());
    let mut m = n.clone();
    let mut v = 0;
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    (v, m)
}

/// Write nonzero `n = sign * s^2 * f` with `f` squarefree; returns `(sign * f, s)`.
pub fn squarefree_decomposition(n: &BigInt) -> (BigInt, BigInt) {
    let mut core = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut root = BigInt::one();
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            core *= &p;
        }
        for _ in 0..e / 2 {
            root *= &p;
        }
    }
    (core, root)
}

/// Squarefree integer in the same square class as the nonzero rational `q`,
/// together with the rational `r` such that `q = core * r^2`.
pub fn square_class(q: &Rat) -> (BigInt, Rat) {
    let n = q.numer() * q.denom();
    let (core, s) = squarefree_decomposition(&n);
    // q = n / d^2 = core * (s / d)^2
    (core, Rat::new(s, q.denom().clone()))
}

/// Legendre symbol `(a | p)` for an odd prime `p`.
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// A square root of `a` modulo the prime `p`, if one exists.
pub fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() || p == &BigInt::from(2) {
        return Some(a);
    }
    if legendre(&a, p) != 1 {
        return None;
    }
    let one = BigInt::one();
    let pm1 = p - &one;
    let s = pm1.trailing_zeros().unwrap_or(0);
    let q = &pm1 >> s;
    if s == 1 {
        return Some(a.modpow(&((p + &one) >> 2), p));
    }
    let mut z = BigInt::from(2);
    while legendre(&z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) >> 1), p);
    while !t.is_one() {
        let mut i = 0;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2) % p;
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..m - i - 1 {
            b = (&b * &b) % p;
        }
        m = i;
        c = (&b * &b) % p;
        t = (&t * &c) % p;
        r = (&r * &b) % p;
    }
    Some(r)
}

/// A square root of `a` modulo the squarefree `n > 0`, combined by CRT.
pub fn sqrt_mod_squarefree(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for p in prime_divisors(n) {
        let r = sqrt_mod_prime(a, &p)?;
        // x' = x (mod m), x' = r (mod p)
        let inv = mod_inverse(&m, &p).expect("coprime moduli");
        let k = ((&r - &x) * inv).mod_floor(&p);
        x += &m * k;
        m *= &p;
    }
    Some(x.mod_floor(n))
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

pub fn to_i64(n: &BigInt) -> Option<i64> {
    n.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factorization() {
        let f = factor(&b(-360));
        assert_eq!(f.get(&b(2)), Some(&3));
        assert_eq!(f.get(&b(3)), Some(&2));
        assert_eq!(f.get(&b(5)), Some(&1));
        let big = b(1_000_000_007) * b(998_244_353);
        let f = factor(&big);
        assert_eq!(f.len(), 2);
        assert!(f.contains_key(&b(998_244_353)));
    }

    #[test]
    fn square_classes() {
        assert_eq!(squarefree_decomposition(&b(-72)), (b(-2), b(6)));
        let (core, r) = square_class(&Rat::new(b(8), b(3)));
        assert_eq!(core, b(6));
        assert_eq!(Rat::from_integer(core) * &r * &r, Rat::new(b(8), b(3)));
    }

    #[test]
    fn modular_roots() {
        assert_eq!(legendre(&b(2), &b(3)), -1);
        assert_eq!(legendre(&b(4), &b(7)), 1);
        for p in [3i64, 5, 13, 17, 41, 97] {
            for a in 0..p {
                match sqrt_mod_prime(&b(a), &b(p)) {
                    Some(r) => assert_eq!((&r * &r) % b(p), b(a)),
                    None => assert_eq!(legendre(&b(a), &b(p)), -1),
                }
            }
        }
        let r = sqrt_mod_squarefree(&b(4), &b(105)).unwrap();
        assert_eq!((&r * &r) % b(105), b(4));
        assert!(sqrt_mod_squarefree(&b(2), &b(15)).is_none());
    }
}
