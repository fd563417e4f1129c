#[allow(dead_code)]
mod certify_fixture {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/certify_fixture.rs"));
}

#[allow(dead_code)]
mod null_cone_factor {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/null_cone_factor.rs"));
}

#[allow(dead_code)]
mod quadric_points {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quadric_points.rs"));
}

#[allow(dead_code)]
mod cubic_chase {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cubic_chase.rs"));
}

#[allow(dead_code)]
mod third_point {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/third_point.rs"));
}

#[allow(dead_code)]
mod wilson_analysis {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/wilson_analysis.rs"));
}

#[allow(dead_code)]
mod picard_two {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/picard_two.rs"));
}

#[allow(dead_code)]
mod inflection {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/inflection.rs"));
}

#[test]
fn certify_fixture_runs() {
    certify_fixture::run_example().expect("certify_fixture");
}

#[test]
fn null_cone_factor_runs() {
    null_cone_factor::run_example().expect("null_cone_factor");
}

#[test]
fn quadric_points_runs() {
    quadric_points::run_example().expect("quadric_points");
}

#[test]
fn cubic_chase_runs() {
    cubic_chase::run_example().expect("cubic_chase");
}

#[test]
fn third_point_runs() {
    third_point::run_example().expect("third_point");
}

#[test]
fn wilson_analysis_runs() {
    wilson_analysis::run_example().expect("wilson_analysis");
}

#[test]
fn picard_two_runs() {
    picard_two::run_example().expect("picard_two");
}

#[test]
fn inflection_runs() {
    inflection::run_example().expect("inflection");
}
