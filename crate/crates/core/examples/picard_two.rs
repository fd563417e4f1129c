// Picard number two: the binary null-cone cubic and its rational rays.

use nefcert::certify::{certify, Assumptions, Options, Problem};
use nefcert::exactmath::{fmt_rat, rvec};
use nefcert::nsring::{Divisor, IntersectionForm, LinearClass};

pub fn run_example() -> nefcert::Result<()> {
    let cases = [
        ("double root", vec![(0, 0, 0, 3), (0, 0, 1, 2), (0, 1, 1, 1)]),
        ("irrational rays", vec![(0, 0, 0, 1), (0, 0, 1, 2), (0, 1, 1, 1)]),
        ("rational rays", vec![(0, 0, 1, 1), (0, 1, 1, 1)]),
    ];
    for (label, entries) in cases {
        let p = Problem {
            form: IntersectionForm::from_entries(2, &entries)?,
            c2: LinearClass::new(rvec(&[1, 0])),
            d: Divisor::named("D", rvec(&[0, 1])),
            h: None,
            assumptions: Assumptions::default(),
        };
        let c = certify(&p, &Options::default())?;
        println!("{label}: {} {}", c.conclusion.as_str(), c.rule);
        if let Some(w) = c.witnesses.get("D'") {
            println!("  D' = ({})", w.iter().map(fmt_rat).collect::<Vec<_>>().join(", "));
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("picard_two");
}
