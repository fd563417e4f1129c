// Walk tangent residuals on the null cone until c2 pairs nontrivially.

use nefcert::cubicchase::{chase, DEFAULT_BUDGET, DEFAULT_DEPTH};
use nefcert::exactmath::{fmt_rat, rvec};
use nefcert::nsring::{IntersectionForm, LinearClass};

pub fn run_example() -> nefcert::Result<()> {
    let form = IntersectionForm::diagonal(&[1, 1, -2, 3]);
    let c2 = LinearClass::new(rvec(&[0, 0, 0, 1]));
    let trace = chase(&form, &c2, &rvec(&[1, 1, 1, 0]), DEFAULT_DEPTH, DEFAULT_BUDGET)?;
    let show = |v: &[nefcert::exactmath::Rat]| v.iter().map(fmt_rat).collect::<Vec<_>>().join(" ");
    for e in trace.edges.iter().take(6) {
        println!("[{}] along [{}] -> [{}]", show(&e.from), show(&e.direction), show(&e.to));
    }
    println!("{} edges, {} degeneracies", trace.edges.len(), trace.degeneracies.len());
    match &trace.witness {
        Some(e) => println!("witness E = [{}], c2.E = {}", show(e), fmt_rat(&c2.eval(e)?)),
        None => println!("no witness (exhausted: {})", trace.exhausted),
    }
    Ok(())
}

fn main() {
    run_example().expect("cubic_chase");
}
