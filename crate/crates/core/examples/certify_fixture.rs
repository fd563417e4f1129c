// Certify every bundled fixture and check that the certificates replay.

use nefcert::certify::{replay, Options};
use nefcert::cli::{certificate_to_text, certify_document, fixtures, parse_input};

pub fn run_example() -> nefcert::Result<()> {
    for f in fixtures() {
        let doc = parse_input(f.input)?;
        let cert = certify_document(&doc, "D", f.ample(), &Options::default())?;
        assert!(replay(&doc.form, &doc.c2, &cert).is_empty());
        println!("{:<20} {:<18} {}", f.name, cert.conclusion.as_str(), cert.rule);
    }
    let f = fixtures().into_iter().find(|f| f.name == "b4_diagonal").unwrap();
    let doc = parse_input(f.input)?;
    print!("\n{}", certificate_to_text(&certify_document(&doc, "D", None, &Options::default())?));
    Ok(())
}

fn main() {
    run_example().expect("certify_fixture");
}
