// Flex test at points of plane cubics.

use nefcert::cubicchase::inflection_test;
use nefcert::exactmath::{fmt_rat, rvec};
use nefcert::nsring::IntersectionForm;

pub fn run_example() -> nefcert::Result<()> {
    let fermat = IntersectionForm::diagonal(&[1, 1, -2]);
    let other = IntersectionForm::diagonal(&[1, 1, -9]);
    for (label, form, e) in [
        ("x^3+y^3-2z^3 at (-1,1,0)", &fermat, rvec(&[-1, 1, 0])),
        ("x^3+y^3-2z^3 at (1,1,1)", &fermat, rvec(&[1, 1, 1])),
        ("x^3+y^3-9z^3 at (2,1,1)", &other, rvec(&[2, 1, 1])),
    ] {
        let t = inflection_test(form, &e)?;
        let g: Vec<String> = t.witness.iter().map(fmt_rat).collect();
        println!("{label}: flex {} with G = ({}), E.G^2 = {}", t.is_flex, g.join(", "), fmt_rat(&t.obstruction));
    }
    Ok(())
}

fn main() {
    run_example().expect("inflection");
}
