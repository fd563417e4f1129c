// The line H - tD through an ample class meets the null cone at t0.

use nefcert::exactmath::{fmt_rat, rvec};
use nefcert::nsring::{cube, key_lemma_flags, numerical_dimension, wilson_line_point, wilson_t0, IntersectionForm};

pub fn run_example() -> nefcert::Result<()> {
    // x0 x1^2 + x1^3: D = e0 has D^2 = 0
    let form = IntersectionForm::from_entries(2, &[(0, 1, 1, 1), (1, 1, 1, 1)])?;
    let d = rvec(&[1, 0]);
    let h = rvec(&[1, 2]);
    println!("nu(D) = {}", numerical_dimension(&form, &d)?);
    let t0 = wilson_t0(&form, &h, &d)?;
    let n = wilson_line_point(&h, &d, &t0);
    println!("t0 = {}", fmt_rat(&t0));
    println!("N = ({}), N^3 = {}", n.iter().map(fmt_rat).collect::<Vec<_>>().join(", "), fmt_rat(&cube(&form, &n)?));
    let before = wilson_line_point(&h, &d, &(t0.clone() / nefcert::exactmath::int(2)));
    println!("flags at t0/2: {:?}", key_lemma_flags(&form, &before, &h)?);
    Ok(())
}

fn main() {
    run_example().expect("wilson_analysis");
}
