// Local-global isotropy of quadratic forms and explicit rational points.

use nefcert::exactmath::{fmt_rat, int, Rat};
use nefcert::quadpoints::{
    hilbert_symbol, isotropic_vector, sample_points, IsotropyVerdict, Place, QuadraticForm, DEFAULT_HEIGHT_BOUND,
};

fn show(v: &[Rat]) -> String {
    v.iter().map(fmt_rat).collect::<Vec<_>>().join(" ")
}

pub fn run_example() -> nefcert::Result<()> {
    let (a, b) = (int(-1), int(-1));
    for place in [Place::Real, Place::prime(2), Place::prime(3)] {
        println!("(-1,-1) at {place} = {}", hilbert_symbol(&a, &b, &place)?);
    }
    for diag in [vec![1, 1, 1], vec![1, 1, -3], vec![2, 3, -5], vec![1, 1, 2, -15], vec![3, 5, 7, -11, -13]] {
        let q = QuadraticForm::diagonal(&diag);
        match isotropic_vector(&q, DEFAULT_HEIGHT_BOUND)? {
            IsotropyVerdict::Isotropic(w) => {
                println!("{diag:?}: zero [{}]", show(&w));
                let more = sample_points(&q, &w, 3, &[])?;
                for p in more {
                    println!("    also [{}]", show(&p));
                }
            }
            IsotropyVerdict::Anisotropic(place) => println!("{diag:?}: anisotropic at {place}"),
            IsotropyVerdict::Degenerate(r) => println!("{diag:?}: radical of dimension {}", r.len()),
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("quadric_points");
}
