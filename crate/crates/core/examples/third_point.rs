// Chord and tangent constructions on the plane cubic x^3 + y^3 = 2 z^3.

use nefcert::cubicchase::{residual_on_tangent, third_point_on_line, ChasePoint};
use nefcert::exactmath::{fmt_rat, rvec};
use nefcert::nsring::{cube, IntersectionForm};

pub fn run_example() -> nefcert::Result<()> {
    let form = IntersectionForm::diagonal(&[1, 1, -2]);
    let p = rvec(&[1, 1, 1]);
    let q = rvec(&[-1, 1, 0]);
    for (label, r) in [
        ("chord P Q", third_point_on_line(&form, &p, &q)?),
        ("tangent at P", residual_on_tangent(&form, &p, &q)?),
        ("tangent at Q", residual_on_tangent(&form, &q, &rvec(&[0, 0, 1]))?),
    ] {
        match r {
            ChasePoint::Point(x) => {
                let c: Vec<String> = x.iter().map(fmt_rat).collect();
                println!("{label}: ({}), cube {}", c.join(", "), fmt_rat(&cube(&form, &x)?));
            }
            ChasePoint::LineContained => println!("{label}: line lies on the cubic"),
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("third_point");
}
