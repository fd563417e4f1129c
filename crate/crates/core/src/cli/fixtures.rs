//! Worked inputs bundled with the crate, each with its committed
//! certificate (`--format json --seed 0`, divisor `D`, ample `H` if present).

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub input: &'static str,
    pub expected: &'static str,
}

impl Fixture {
    /// `H` when the input names one.
    pub fn ample(&self) -> Option<&'static str> {
        self.input.contains("\"H\":").then_some("H")
    }
}

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        vec![$(Fixture {
            name: $name,
            input: include_str!(concat!("../../fixtures/", $name, ".input.json")),
            expected: include_str!(concat!("../../fixtures/", $name, ".expected.json")),
        }),*]
    };
}

pub fn fixtures() -> Vec<Fixture> {
    corpus![
        "nefpsef",
        "c2_nu1",
        "c2_nonzero",
        "b5_reducible",
        "b5_irreducible",
        "b4_diagonal",
        "b4_reducible",
        "b3_nonflex",
        "b3_flex",
        "b3_node",
        "b2_2_double_root",
        "b2_2_nonsquare",
        "b2_2_null_rational",
        "nu_zero",
        "three_planes",
        "definite_residual",
    ]
}
