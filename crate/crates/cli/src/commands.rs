//! Command implementations. Each returns its standard output, diagnostics
//! and exit code so it can be exercised without spawning a process.

use std::path::Path;

use ncreflect_core::divisors::{self, DivisorSide};
use ncreflect_core::input::InputSpec;
use ncreflect_core::presets;

use crate::analysis::{self, auto_mode, AnalyzeError};
use crate::fixtures;
use crate::report::Report;
use crate::specfile::{self, SpecError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_THEOREM: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sides {
    Left,
    Right,
    Both,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn fail(code: i32, message: impl std::fmt::Display) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code,
        }
    }
}

fn spec_failure(e: &SpecError) -> Outcome {
    let code = match e {
        SpecError::Io { .. } => EXIT_SCHEMA,
        SpecError::Syntax { .. } | SpecError::Schema { .. } => EXIT_SCHEMA,
    };
    Outcome::fail(code, e)
}

fn analyze_failure(origin: &str, e: &AnalyzeError) -> Outcome {
    let AnalyzeError::Load(le) = e;
    match specfile::load_error(origin, le) {
        Some(se) => Outcome::fail(e.exit_code(), se),
        None => Outcome::fail(e.exit_code(), format!("{origin}: {e}")),
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Machine => report.to_machine(),
    }
}

/// `validate <file>`: parse, check the schema and verify every structure.
pub fn validate(path: &Path, max_degree: Option<u32>) -> Outcome {
    let origin = path.display().to_string();
    let spec = match specfile::read(path) {
        Ok(s) => s,
        Err(e) => return spec_failure(&e),
    };
    match spec.load(max_degree) {
        Ok(p) => Outcome {
            stdout: format!(
                "{origin}: valid ({} generators, Hopf algebra of dimension {}, {} characters, truncation degree {})\n",
                p.alg().ngens(),
                p.hopf().dim(),
                p.chars.len(),
                p.alg().max_degree()
            ),
            stderr: String::new(),
            code: EXIT_OK,
        },
        Err(e) => analyze_failure(&origin, &AnalyzeError::Load(e)),
    }
}

fn emit(report: &Report, format: Format, out: Option<&Path>) -> Outcome {
    let body = render(report, format);
    match out {
        None => Outcome {
            stdout: body,
            stderr: String::new(),
            code: report.exit_code,
        },
        Some(p) => match std::fs::write(p, body) {
            Ok(()) => Outcome {
                stdout: String::new(),
                stderr: format!("wrote {} (exit code {})\n", p.display(), report.exit_code),
                code: report.exit_code,
            },
            Err(e) => Outcome::fail(EXIT_SCHEMA, format!("{}: {e}", p.display())),
        },
    }
}

/// `analyze <file>`.
pub fn analyze(
    path: &Path,
    max_degree: Option<u32>,
    format: Format,
    out: Option<&Path>,
) -> Outcome {
    let origin = path.display().to_string();
    let spec = match specfile::read(path) {
        Ok(s) => s,
        Err(e) => return spec_failure(&e),
    };
    let name = path
        .file_name()
        .map_or(origin.clone(), |n| n.to_string_lossy().into_owned());
    match analysis::analyze(&spec, &name, max_degree) {
        Ok(r) => emit(&r, format, out),
        Err(e) => analyze_failure(&origin, &e),
    }
}

/// `preset list`.
pub fn preset_list() -> Outcome {
    let mut stdout = String::new();
    for name in presets::list() {
        match fixtures::find(name) {
            Some(f) => stdout.push_str(&format!("{name}\tpresets/{}.spec\n", f.stem)),
            None => stdout.push_str(&format!("{name}\n")),
        }
    }
    Outcome {
        stdout,
        stderr: String::new(),
        code: EXIT_OK,
    }
}

/// `preset spec <name>`: the preset as a `.spec` document.
pub fn preset_spec(name: &str) -> Outcome {
    match presets::load(name) {
        Ok(spec) => Outcome {
            stdout: specfile::to_string(&spec),
            stderr: String::new(),
            code: EXIT_OK,
        },
        Err(e) => Outcome::fail(EXIT_SCHEMA, e),
    }
}

/// Result of comparing a preset run with its shipped fixtures.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct FixtureCheck {
    pub spec_matches: Option<bool>,
    pub golden: Option<Vec<String>>,
    pub expectations: Option<Vec<String>>,
}

impl FixtureCheck {
    pub fn passed(&self) -> bool {
        self.spec_matches != Some(false)
            && self.golden.as_ref().is_none_or(|d| d.is_empty())
            && self.expectations.as_ref().is_none_or(|d| d.is_empty())
    }
}

/// Analyze a preset and compare with its golden report and expected values
/// when the truncation degree matches the fixture.
pub fn run_preset(name: &str, max_degree: Option<u32>) -> Result<(Report, FixtureCheck), Outcome> {
    let spec: InputSpec = presets::load(name).map_err(|e| Outcome::fail(EXIT_SCHEMA, e))?;
    let fixture = fixtures::find(name);
    let report =
        analysis::analyze(&spec, name, max_degree).map_err(|e| analyze_failure(name, &e))?;
    let mut check = FixtureCheck::default();
    if let Some(f) = fixture {
        let shipped = specfile::parse_str(f.spec, &format!("presets/{}.spec", f.stem));
        check.spec_matches = Some(shipped.as_ref().is_ok_and(|s| *s == spec));
        let expect = f.expectations();
        if expect.max_degree == report.max_degree {
            check.golden = Some(fixtures::diff(f.golden, &report.to_machine()));
            check.expectations = Some(fixtures::compare(&report, &expect));
        }
    }
    Ok((report, check))
}

/// `preset run <name>`.
pub fn preset_run(
    name: &str,
    max_degree: Option<u32>,
    format: Format,
    out: Option<&Path>,
) -> Outcome {
    let (report, check) = match run_preset(name, max_degree) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let mut o = emit(&report, format, out);
    let mut notes = String::new();
    match check.spec_matches {
        Some(true) => notes.push_str("fixture: shipped spec file matches the preset\n"),
        Some(false) => notes.push_str("fixture: shipped spec file differs from the preset\n"),
        None => notes.push_str("fixture: none for this preset\n"),
    }
    match &check.golden {
        Some(d) if d.is_empty() => notes.push_str("fixture: golden report matches\n"),
        Some(d) => {
            notes.push_str(&format!(
                "fixture: golden report differs in {} lines\n",
                d.len()
            ));
            for line in d.iter().take(20) {
                notes.push_str(&format!("  {line}\n"));
            }
        }
        None if check.spec_matches.is_some() => {
            notes.push_str("fixture: truncation degree differs; golden comparison skipped\n")
        }
        None => {}
    }
    if let Some(m) = &check.expectations {
        if m.is_empty() {
            notes.push_str("fixture: all expected values match\n");
        }
        for line in m {
            notes.push_str(&format!("fixture: mismatch {line}\n"));
        }
    }
    o.stderr.push_str(&notes);
    if !check.passed() {
        o.code = EXIT_THEOREM;
    }
    o
}

/// `divisors <file> --element <expr>`.
pub fn divisors_command(
    path: &Path,
    element: &str,
    sides: Sides,
    max_degree: Option<u32>,
) -> Outcome {
    let origin = path.display().to_string();
    let spec = match specfile::read(path) {
        Ok(s) => s,
        Err(e) => return spec_failure(&e),
    };
    let p = match spec.load(max_degree) {
        Ok(p) => p,
        Err(e) => return analyze_failure(&origin, &AnalyzeError::Load(e)),
    };
    let alg = p.alg();
    let f = match alg.parse(element) {
        Ok(f) => f,
        Err(e) => return Outcome::fail(EXIT_SCHEMA, format!("--element: {e}")),
    };
    let mode = auto_mode(alg);
    let list = match sides {
        Sides::Left => vec![DivisorSide::Left],
        Sides::Right => vec![DivisorSide::Right],
        Sides::Both => vec![DivisorSide::Left, DivisorSide::Right],
    };
    let mut stdout = format!("element: {}\n", analysis::poly(alg, &f));
    let mut stderr = String::new();
    for side in list {
        match divisors::divisors(alg, &f, side, mode, p.conductor, &p.divisor_candidates) {
            Ok(rep) => {
                let e = analysis::divisor_entry(alg, "f", mode, &rep);
                stdout.push_str(&format!(
                    "{} ({}): {}\n",
                    e.side,
                    e.mode,
                    e.lines.join(", ")
                ));
                if let Some(c) = &e.certificate {
                    stdout.push_str(&format!("  certificate form: {c}\n"));
                }
                if e.residual_warning {
                    stderr.push_str(&format!(
                        "warning: residual factor {} on the {} side may hide divisors outside the candidate family\n",
                        e.residual.as_deref().unwrap_or("?"),
                        e.side
                    ));
                }
            }
            Err(e) => return Outcome::fail(EXIT_SCHEMA, format!("--element: {e}")),
        }
    }
    Outcome {
        stdout,
        stderr,
        code: EXIT_OK,
    }
}
