use std::path::PathBuf;

use nefcert::certify::{replay, Conclusion, Rule};
use nefcert::cli::{
    certificate_from_json, certificate_from_text, certificate_to_text, fixtures, parse_input, run_with,
    serialize_input, Fixture,
};

fn input_path(f: &Fixture) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{}.input.json", f.name))
}

fn certify_json(f: &Fixture) -> (i32, String) {
    let path = input_path(f);
    let mut args = vec!["nefcert", "certify", "--input", path.to_str().unwrap(), "--divisor", "D"];
    if let Some(h) = f.ample() {
        args.extend(["--ample", h]);
    }
    args.extend(["--format", "json", "--seed", "0"]);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(args, &mut out, &mut err);
    assert!(err.is_empty(), "{}: {}", f.name, String::from_utf8_lossy(&err));
    (code, String::from_utf8(out).unwrap())
}

// NEFCERT_BLESS=1 cargo test --test fixtures rewrites the expected files
#[test]
fn corpus_reproduces_byte_identically() {
    let bless = std::env::var_os("NEFCERT_BLESS").is_some();
    for f in fixtures() {
        let (code, got) = certify_json(&f);
        if bless {
            let p = input_path(&f).with_file_name(format!("{}.expected.json", f.name));
            std::fs::write(p, &got).unwrap();
            continue;
        }
        assert_eq!(got, f.expected, "fixture {}", f.name);
        let c = certificate_from_json(&got).unwrap();
        assert_eq!(code, c.conclusion.exit_code());
    }
}

#[test]
fn corpus_covers_every_outcome() {
    let certs: Vec<_> = fixtures().iter().map(|f| certificate_from_json(f.expected).unwrap()).collect();
    for rule in [
        Rule::NefpsefContrapositive,
        Rule::PropC2Nu1,
        Rule::PropC2Nonzero,
        Rule::ThmMainReducible,
        Rule::ThmMainIrreducible,
        Rule::CorIrreducibleB4,
        Rule::PropB2Three,
        Rule::PropB2TwoNullRational,
        Rule::PropB2TwoDoubleRoot,
    ] {
        assert!(certs.iter().any(|c| c.rule == rule && c.conclusion == Conclusion::Certified), "{rule}");
    }
    assert!(certs.iter().any(|c| c.conclusion == Conclusion::Inconclusive));
    assert!(certs.iter().any(|c| c.conclusion == Conclusion::InputInconsistent));
    assert!(fixtures().len() >= 8);
}

#[test]
fn committed_certificates_replay() {
    for f in fixtures() {
        let doc = parse_input(f.input).unwrap();
        let c = certificate_from_json(f.expected).unwrap();
        assert!(replay(&doc.form, &doc.c2, &c).is_empty(), "fixture {}", f.name);
    }
}

#[test]
fn inputs_round_trip_through_serializer() {
    for f in fixtures() {
        let doc = parse_input(f.input).unwrap();
        let again = parse_input(&serialize_input(&doc)).unwrap();
        assert_eq!(again, doc, "fixture {}", f.name);
    }
}

#[test]
fn text_and_json_carry_the_same_fields() {
    for f in fixtures() {
        let c = certificate_from_json(f.expected).unwrap();
        assert_eq!(certificate_from_text(&certificate_to_text(&c)).unwrap(), c, "fixture {}", f.name);
    }
}

#[test]
fn hand_checked_fixtures() {
    let get = |n: &str| {
        let f = fixtures().into_iter().find(|f| f.name == n).unwrap();
        certificate_from_json(f.expected).unwrap()
    };
    let value = |c: &nefcert::certify::Certificate, check: &str| {
        nefcert::exactmath::fmt_rat(&c.trace.iter().find(|t| t.check == check).unwrap().value)
    };
    let c = get("b4_diagonal");
    assert_eq!(c.witnesses["E"], nefcert::exactmath::rvec(&[-1, 3, 1, -2]));
    assert_eq!(value(&c, "c2(E)"), "-2");
    // E^3 = 3, E^2.D = 2, E.D^2 = 1 and D' = -6E + 6D
    let c = get("b2_2_double_root");
    assert_eq!(c.witnesses["D'"], nefcert::exactmath::rvec(&[-6, 6]));
    assert_eq!(value(&c, "triple(D',D',E)"), "0");
    let c = get("b2_2_nonsquare");
    assert_eq!(value(&c, "b2_disc(E,D)"), "24");
    assert_eq!(get("c2_nonzero").rule, Rule::PropC2Nonzero);
    assert_eq!(value(&get("c2_nonzero"), "c2(D)"), "7");
}
