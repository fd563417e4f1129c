//! Explicit zeros of diagonal forms over ℚ by Lagrange descent on
//! `z^2 = a x^2 + b y^2`, and splittings for four or more variables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use std::collections::BTreeSet;

use super::hilbert::{local_obstruction, locally_isotropic, Place};
use crate::exactmath::ntheory::{
    is_probable_prime, legendre, mod_inverse, prime_divisors, sqrt_mod_squarefree, squarefree_decomposition,
};
use crate::exactmath::{is_perfect_square, Rat};

// terms of the progression tried when splitting off a value t
const SPLIT_LIMIT: i64 = 1 << 14;

fn prim(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Nontrivial `(x, y, z)` with `z^2 = a x^2 + b y^2`, for squarefree
/// nonzero `a`, `b`; `None` when none exists.
pub(crate) fn legendre_solve(a: &BigInt, b: &BigInt) -> Option<[BigInt; 3]> {
    let (zero, one) = (BigInt::zero(), BigInt::one());
    if a.is_one() {
        return Some([one.clone(), zero, one]);
    }
    if b.is_one() {
        return Some([zero, one.clone(), one]);
    }
    if a.is_negative() && b.is_negative() {
        return None;
    }
    if a == &-b {
        return Some([one.clone(), one, zero]);
    }
    if a.abs() > b.abs() {
        let [x, y, z] = legendre_solve(b, a)?;
        return Some([y, x, z]);
    }
    let m = b.abs();
    let mut t = sqrt_mod_squarefree(a, &m)?;
    if &t * 2 > m {
        t -= &m;
    }
    let c = (&t * &t - a) / b;
    if c.is_zero() {
        return None;
    }
    let (core, s) = squarefree_decomposition(&c);
    let [x1, y1, z1] = legendre_solve(a, &core)?;
    // (z1 + x1 sqrt a)(t + sqrt a) has norm b (c y1 / s)^2
    let zz = &z1 * &t + a * &x1;
    let xx = &z1 + &t * &x1;
    let v = prim(vec![&s * xx, &c * y1, &s * zz]);
    Some([v[0].clone(), v[1].clone(), v[2].clone()])
}

/// Nontrivial integer zero of `c0 X^2 + c1 Y^2 + c2 Z^2` (nonzero integers).
pub(crate) fn ternary_zero(c: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(c.len(), 3);
    let dec: Vec<(BigInt, BigInt)> = c.iter().map(squarefree_decomposition).collect();
    let (a1, a2, a3) = (&dec[0].0, &dec[1].0, &dec[2].0);
    // multiply by a3: (a3 Z)^2 = -a1 a3 X^2 - a2 a3 Y^2
    let (ca, sa) = squarefree_decomposition(&-(a1 * a3));
    let (cb, sb) = squarefree_decomposition(&-(a2 * a3));
    let [x, y, z] = legendre_solve(&ca, &cb)?;
    // core coordinates, then undo the square parts r_i of c_i
    let core = [
        Rat::new(x, sa.clone()),
        Rat::new(y, sb.clone()),
        Rat::new(z, a3.clone()),
    ];
    let out: Vec<Rat> = core.iter().zip(&dec).map(|(v, (_, r))| v / Rat::from_integer(r.clone())).collect();
    Some(to_integers(&out))
}

fn to_integers(v: &[Rat]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    prim(v.iter().map(|x| (x * &l).to_integer()).collect())
}

/// A value `t` such that `<left, -t>` and `<right, t>` are both isotropic
/// everywhere. The square class of `t` is fixed at the real place and at the
/// primes of `2 * coefficients`, combined by CRT, and the progression is
/// walked until the remaining cofactor is prime; the one new prime is then
/// harmless for the ternary side by the product formula and checked for the
/// other.
fn split_value(left: &[BigInt], right: &[BigInt]) -> Option<BigInt> {
    let mut primes = BTreeSet::new();
    primes.insert(BigInt::from(2));
    for c in left.iter().chain(right) {
        primes.extend(prime_divisors(c));
    }
    let both = |t: &BigInt, place: &Place| {
        let mut l = left.to_vec();
        l.push(-t);
        let mut r = right.to_vec();
        r.push(t.clone());
        locally_isotropic(&l, place) && locally_isotropic(&r, place)
    };
    let sign = [BigInt::one(), -BigInt::one()].into_iter().find(|s| both(s, &Place::Real))?;
    // T = sign * t > 0 with T = target mod modulus
    let (mut target, mut modulus) = (BigInt::zero(), BigInt::one());
    let mut exact = BigInt::one();
    for p in &primes {
        let place = Place::Prime(p.clone());
        let two = p == &BigInt::from(2);
        let units: Vec<BigInt> = if two {
            [1, 3, 5, 7].map(BigInt::from).to_vec()
        } else {
            let non = (2u32..).map(BigInt::from).find(|r| legendre(r, p) == -1)?;
            vec![BigInt::one(), non]
        };
        let (e, u) = (0u32..2)
            .flat_map(|e| units.iter().map(move |u| (e, u.clone())))
            .find(|(e, u)| both(&(&sign * p.pow(*e) * u), &place))?;
        let m = p.pow(e + if two { 3 } else { 1 });
        let a = p.pow(e) * u;
        // x = target mod modulus and x = a mod m
        let k = ((&a - &target) * mod_inverse(&modulus, &m)?).mod_floor(&m);
        target += &modulus * k;
        modulus *= &m;
        exact *= p.pow(e);
    }
    for k in 0..SPLIT_LIMIT {
        let big_t = &target + &modulus * BigInt::from(k);
        if big_t.is_zero() {
            continue;
        }
        let rest = &big_t / &exact;
        if !(rest.is_one() || is_probable_prime(&rest)) {
            continue;
        }
        let t = &sign * &big_t;
        if rest.is_one() || both(&t, &Place::Prime(rest)) {
            return Some(t);
        }
    }
    None
}

fn quaternary_zero(c: &[BigInt]) -> Option<Vec<BigInt>> {
    for skip in (0..4).rev() {
        let idx: Vec<usize> = (0..4).filter(|&i| i != skip).collect();
        let sub: Vec<BigInt> = idx.iter().map(|&i| c[i].clone()).collect();
        if local_obstruction(&sub).is_none() {
            let w = ternary_zero(&sub)?;
            let mut out = vec![BigInt::zero(); 4];
            for (k, &i) in idx.iter().enumerate() {
                out[i] = w[k].clone();
            }
            return Some(out);
        }
    }
    // c0 x^2 + c1 y^2 = t u^2 and c2 z^2 + c3 w^2 = -t v^2
    let t = split_value(&c[..2], &c[2..])?;
    let l = ternary_zero(&[c[0].clone(), c[1].clone(), -t.clone()])?;
    let r = ternary_zero(&[c[2].clone(), c[3].clone(), t])?;
    let (u, v) = (&l[2], &r[2]);
    let z = BigInt::zero();
    Some(match (u.is_zero(), v.is_zero()) {
        (true, _) => prim(vec![l[0].clone(), l[1].clone(), z.clone(), z]),
        (_, true) => prim(vec![z.clone(), z, r[0].clone(), r[1].clone()]),
        _ => prim(vec![&l[0] * v, &l[1] * v, &r[0] * u, &r[1] * u]),
    })
}

fn quinary_zero(c: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = c.len();
    let embed = |idx: &[usize], w: Vec<BigInt>| {
        let mut out = vec![BigInt::zero(); n];
        for (k, &i) in idx.iter().enumerate() {
            out[i] = w[k].clone();
        }
        out
    };
    let pick = |idx: &[usize]| idx.iter().map(|&i| c[i].clone()).collect::<Vec<_>>();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let idx = [i, j, k];
                if local_obstruction(&pick(&idx)).is_none() {
                    return ternary_zero(&pick(&idx)).map(|w| embed(&idx, w));
                }
            }
        }
    }
    for skip in 0..n {
        let idx: Vec<usize> = (0..n).filter(|&i| i != skip).collect();
        if local_obstruction(&pick(&idx)).is_none() {
            if let Some(w) = quaternary_zero(&pick(&idx)) {
                return Some(embed(&idx, w));
            }
        }
    }
    // split <ci, cj> (representing t) against the remaining three
    // (representing -t), smallest t first
    let mut splits = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
            if let Some(t) = split_value(&[c[i].clone(), c[j].clone()], &pick(&rest)) {
                splits.push((t.bits(), i, j, rest, t));
            }
        }
    }
    splits.sort_by_key(|s| (s.0, s.1, s.2));
    for (_, i, j, rest, t) in splits {
        let Some(l) = ternary_zero(&[c[i].clone(), c[j].clone(), -t.clone()]) else {
            continue;
        };
        let mut right = pick(&rest);
        right.push(t);
        let Some(r) = quaternary_zero(&right) else {
            continue;
        };
        // either side alone is a zero when its t-coordinate vanishes
        let one = BigInt::one();
        let (u, v) = match (l[2].is_zero(), r[3].is_zero()) {
            (true, _) => (&l[2], &one),
            (_, true) => (&one, &r[3]),
            _ => (&l[2], &r[3]),
        };
        let mut out = vec![BigInt::zero(); n];
        out[i] = &l[0] * v;
        out[j] = &l[1] * v;
        for (k, &m) in rest.iter().enumerate() {
            out[m] = &r[k] * u;
        }
        return Some(prim(out));
    }
    None
}

/// A zero of the diagonal form with the given nonzero integer entries,
/// assuming it is isotropic. `None` if the constructive search gave up.
pub(crate) fn diagonal_zero(c: &[BigInt]) -> Option<Vec<BigInt>> {
    match c.len() {
        0 | 1 => None,
        2 => {
            let q = is_perfect_square(&-Rat::new(c[1].clone(), c[0].clone()))?;
            Some(prim(vec![q.numer().clone(), q.denom().clone()]))
        }
        3 => ternary_zero(c),
        4 => quaternary_zero(c),
        n => {
            // a five-element subset with both signs
            let pos: Vec<usize> = (0..n).filter(|&i| c[i].is_positive()).collect();
            let neg: Vec<usize> = (0..n).filter(|&i| c[i].is_negative()).collect();
            let (&p, &q) = (pos.first()?, neg.first()?);
            let mut idx = vec![p, q];
            idx.extend((0..n).filter(|&i| i != p && i != q).take(3));
            idx.sort();
            let sub: Vec<BigInt> = idx.iter().map(|&i| c[i].clone()).collect();
            let w = quinary_zero(&sub)?;
            let mut out = vec![BigInt::zero(); n];
            for (k, &i) in idx.iter().enumerate() {
                out[i] = w[k].clone();
            }
            Some(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn value(c: &[BigInt], w: &[BigInt]) -> BigInt {
        c.iter().zip(w).map(|(a, x)| a * x * x).sum()
    }

    #[test]
    fn descent_solves_classical_equations() {
        for (a, bb) in [(2, 7), (-1, 5), (3, 13), (-7, 11), (5, -3), (6, 10)] {
            if let Some([x, y, z]) = legendre_solve(&b(a), &squarefree_decomposition(&b(bb)).0) {
                let bb = squarefree_decomposition(&b(bb)).0;
                assert_eq!(&z * &z, b(a) * &x * &x + &bb * &y * &y, "a={a} b={bb}");
                assert!(!(x.is_zero() && y.is_zero() && z.is_zero()));
            }
        }
        assert!(legendre_solve(&b(-1), &b(-1)).is_none());
        assert!(legendre_solve(&b(3), &b(-1)).is_none());
    }

    #[test]
    fn ternary_examples() {
        let c = [b(2), b(3), b(-5)];
        let w = ternary_zero(&c).unwrap();
        assert!(value(&c, &w).is_zero());
        let c = [b(12), b(-75), b(1)];
        let w = ternary_zero(&c).unwrap();
        assert!(value(&c, &w).is_zero());
    }

    #[test]
    fn higher_rank_examples() {
        // every ternary subform of <1, 1, 2, -15> is anisotropic, so this goes through the split
        for c in [vec![1, 1, 2, -15], vec![1, 2, -3, -6], vec![3, 5, 7, -11, -13], vec![1, 1, 1, 1, -1, 2]] {
            let c: Vec<BigInt> = c.into_iter().map(b).collect();
            let w = diagonal_zero(&c).unwrap();
            assert!(value(&c, &w).is_zero());
            assert!(w.iter().any(|x| !x.is_zero()));
        }
    }
}
