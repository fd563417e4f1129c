#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;

use nefcert::exactmath::{int, Poly, Rat};
use nefcert::nsring::{cube, IntersectionForm};

pub fn rand_vec(rng: &mut impl Rng, n: usize, h: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-h..=h)).collect()
}

pub fn nonzero_vec(rng: &mut impl Rng, n: usize, h: i64) -> Vec<i64> {
    loop {
        let v = rand_vec(rng, n, h);
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

pub fn to_rat(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| int(x)).collect()
}

/// A random sparse trilinear form of rank `n` with entries in `[-h, h]`.
pub fn random_form(rng: &mut impl Rng, n: usize, h: i64, density: f64) -> Vec<(usize, usize, usize, i64)> {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                if rng.gen_bool(density) {
                    e.push((i, j, k, rng.gen_range(-h..=h)));
                }
            }
        }
    }
    e
}

/// A random form with a planted point `D` (leading coordinate 1) on its
/// null cone, obtained by solving for `d_000`.
pub fn planted(rng: &mut impl Rng, n: usize, h: i64) -> (IntersectionForm, Vec<Rat>) {
    let mut entries: Vec<_> = random_form(rng, n, h, 0.5).into_iter().filter(|&(i, j, k, _)| (i, j, k) != (0, 0, 0)).collect();
    let mut d = rand_vec(rng, n, 3);
    d[0] = 1;
    let d = to_rat(&d);
    let f = IntersectionForm::from_entries(n, &entries).unwrap();
    let rest = cube(&f, &d).unwrap();
    let d000 = -rest.to_integer();
    let form = IntersectionForm::new(
        n,
        entries
            .drain(..)
            .map(|(i, j, k, v)| ((i, j, k), BigInt::from(v)))
            .chain(std::iter::once(((0, 0, 0), d000))),
    )
    .unwrap();
    (form, d)
}

pub fn linear_poly(c: &[i64]) -> Poly {
    Poly::linear(&to_rat(c))
}

pub fn quadric_poly(rng: &mut impl Rng, n: usize, h: i64) -> Poly {
    loop {
        let mut q = Poly::zero(n);
        for i in 0..n {
            for j in i..n {
                let c = rng.gen_range(-h..=h);
                if c != 0 && rng.gen_bool(0.6) {
                    let mut e = vec![0; n];
                    e[i] += 1;
                    e[j] += 1;
                    q.add_term(e, int(c));
                }
            }
        }
        if !q.is_zero() {
            return q;
        }
    }
}

/// `det` of a 3x3 rational matrix by cofactor expansion.
pub fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Hessian determinant of the ternary cubic at `e`, straight from the
/// tensor: `d^2 F / dx_i dx_j = 6 sum_k t_ijk e_k`.
pub fn hessian_det(form: &IntersectionForm, e: &[Rat]) -> Rat {
    let m: [[Rat; 3]; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).map(|k| Rat::from_integer(form.entry(i, j, k)) * &e[k]).sum::<Rat>())
    });
    det3(&m)
}
