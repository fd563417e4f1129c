// Expand a trilinear form into its cubic and factor it over Q.

use nefcert::cubicfactor::{expand_cubic, factor_over_q, FactorShape};
use nefcert::exactmath::fmt_rat;
use nefcert::nsring::IntersectionForm;

pub fn run_example() -> nefcert::Result<()> {
    let forms = [
        ("diagonal", IntersectionForm::diagonal(&[1, 1, -2, 3, 5])),
        ("x0 times a quadric", IntersectionForm::from_entries(5, &[(0, 0, 0, 3), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1), (0, 4, 4, -1)])?),
        ("three planes", IntersectionForm::from_entries(3, &[(0, 1, 2, 1)])?),
        ("a double plane", IntersectionForm::from_entries(2, &[(0, 1, 1, 1)])?),
    ];
    for (label, form) in forms {
        let f = expand_cubic(&form);
        let fac = factor_over_q(&f, 0)?;
        println!("{label}: F = {}", f.poly());
        println!("  shape {} scalar {}", fac.name(), fmt_rat(&fac.scalar));
        for l in fac.linear_factors() {
            let c: Vec<String> = l.coords.iter().map(fmt_rat).collect();
            println!("  linear factor ({})", c.join(", "));
        }
        if let FactorShape::LinearTimesQuadric(_, q) = &fac.shape {
            println!("  quadric {}", q.to_poly());
        }
        if let Some(p) = fac.product() {
            assert_eq!(&p, f.poly());
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("null_cone_factor");
}
