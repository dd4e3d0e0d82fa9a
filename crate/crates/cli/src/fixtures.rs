//! Shipped presentation files, expected values and golden reports for the
//! preset catalogue.

use serde::Deserialize;

use crate::report::Report;

pub struct Fixture {
    pub preset: &'static str,
    /// File stem under `presets/`.
    pub stem: &'static str,
    pub spec: &'static str,
    pub expect: &'static str,
    pub golden: &'static str,
}

macro_rules! fixture {
    ($preset:expr, $stem:literal) => {
        Fixture {
            preset: $preset,
            stem: $stem,
            spec: include_str!(concat!("../presets/", $stem, ".spec")),
            expect: include_str!(concat!("../presets/", $stem, ".expect")),
            golden: include_str!(concat!("../presets/", $stem, ".report")),
        }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("trivial", "trivial"),
    fixture!("e22-dualD8", "e22"),
    fixture!("e23-downup-dualD8", "e23"),
    fixture!("l41-cyclic-n-m(z3,2,3)", "l41-cyclic"),
    fixture!("l41-mystic(1,2)", "l41-mystic-1-2"),
    fixture!("l41-mystic(2,4)", "l41-mystic-2-4"),
    fixture!("e42-kacpalyutkin", "e42"),
];

pub fn find(preset: &str) -> Option<&'static Fixture> {
    let key: String = preset.chars().filter(|c| !c.is_whitespace()).collect();
    FIXTURES.iter().find(|f| f.preset == key || f.stem == key)
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Stated in the worked example.
    Reference,
    /// Computed by an independent oracle and frozen.
    Derived,
    /// Holds by construction.
    Trivial,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub field: String,
    pub value: toml::Value,
    pub provenance: Provenance,
    #[serde(default)]
    pub note: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectFile {
    pub preset: String,
    pub max_degree: u32,
    #[serde(default)]
    pub expect: Vec<Expectation>,
}

impl Fixture {
    pub fn expectations(&self) -> ExpectFile {
        toml::from_str(self.expect).unwrap_or_else(|e| panic!("{}.expect: {e}", self.stem))
    }

    pub fn golden_report(&self) -> Report {
        Report::from_machine(self.golden).unwrap_or_else(|e| panic!("{}.report: {e}", self.stem))
    }
}

/// Mismatches between a report and the expected values.
pub fn compare(report: &Report, expect: &ExpectFile) -> Vec<String> {
    let mut out = Vec::new();
    for e in &expect.expect {
        match report.field(&e.field) {
            Some(v) if v == e.value => {}
            Some(v) => out.push(format!(
                "{}: expected {} ({:?}), found {}",
                e.field, e.value, e.provenance, v
            )),
            None => out.push(format!("{}: missing ({:?})", e.field, e.provenance)),
        }
    }
    out
}

/// Line-level differences between a golden document and a fresh one.
pub fn diff(golden: &str, fresh: &str) -> Vec<String> {
    let g: Vec<&str> = golden.lines().collect();
    let f: Vec<&str> = fresh.lines().collect();
    let mut out = Vec::new();
    for k in 0..g.len().max(f.len()) {
        let (a, b) = (g.get(k), f.get(k));
        if a != b {
            out.push(format!(
                "line {}: golden `{}`, found `{}`",
                k + 1,
                a.unwrap_or(&""),
                b.unwrap_or(&"")
            ));
        }
    }
    out
}
