//! End-to-end tests of the `ncreflect` binary: exit codes, diagnostics and
//! report contents.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ncreflect::report::Report;
use ncreflect::specfile;
use ncreflect_core::input::{ActionSpec, InputSpec};
use ncreflect_core::presets;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ncreflect"));
    c.env_remove("NCREFLECT_MAX_DEGREE");
    c
}

fn preset_file(stem: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("presets")
        .join(format!("{stem}.spec"))
}

fn write_spec(dir: &tempfile::TempDir, name: &str, spec: &InputSpec) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, specfile::to_string(spec)).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn machine(file: &Path, extra: &[&str]) -> (Report, i32) {
    let o = bin()
        .arg("analyze")
        .arg(file)
        .args(["--format", "machine"])
        .args(extra)
        .output()
        .unwrap();
    (
        Report::from_machine(&stdout(&o)).unwrap(),
        o.status.code().unwrap(),
    )
}

#[test]
fn analyze_e42_reports_jacobian_and_arrangement() {
    let o = bin()
        .args(["analyze", "--max-degree", "12"])
        .arg(preset_file("e42"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("j = u^3*v + u*v^3"), "{text}");
    assert!(text.contains("jacobian-eq-arrangement: pass"), "{text}");
}

#[test]
fn analyze_e22_discriminant_in_generators() {
    let (r, code) = machine(&preset_file("e22"), &[]);
    assert_eq!(code, 0);
    assert_eq!(
        r.discriminant.unwrap().in_generators.as_deref(),
        Some("t1*t2*t3")
    );
}

#[test]
fn analyze_trivial_is_trivial() {
    let (r, code) = machine(&preset_file("trivial"), &["--max-degree", "6"]);
    assert_eq!(code, 0);
    assert_eq!(r.xi.series, "1");
    assert_eq!(r.jacobian.unwrap().j, "1");
    assert_eq!(r.arrangement.unwrap().a, "1");
    assert_eq!(r.discriminant.unwrap().delta.as_deref(), Some("1"));
}

#[test]
fn hypothesis_failure_exits_4() {
    let (r, code) = machine(&preset_file("e23"), &["--max-degree", "8"]);
    assert_eq!(code, 4);
    assert_eq!(r.exit_code, 4);
    assert_eq!(r.check("fixed-ring-regular").unwrap().status.name(), "fail");
}

#[test]
fn corrupted_coproduct_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = presets::load("e42-kacpalyutkin").unwrap();
    let ActionSpec::Table(t) = &mut spec.action else {
        unreachable!()
    };
    for row in t.comult.iter_mut().filter(|r| r[0] == "z") {
        row[3] = if row[3].starts_with('-') {
            "-1".into()
        } else {
            "1".into()
        };
    }
    let path = write_spec(&dir, "bad.spec", &spec);
    let o = bin().arg("validate").arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("fails at"), "{}", stderr(&o));
}

#[test]
fn wrong_supplied_hdet_exits_5() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = presets::load("e42-kacpalyutkin").unwrap();
    spec.options.hdet = Some("g".into());
    let path = write_spec(&dir, "hdet.spec", &spec);
    let (r, code) = machine(&path, &["--max-degree", "8"]);
    assert_eq!(code, 5);
    assert!(r
        .checks
        .iter()
        .any(|c| c.kind == ncreflect::report::CheckKind::Theorem && c.status.name() == "fail"));
}

#[test]
fn malformed_relation_reports_offset_zero() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = presets::load("trivial").unwrap();
    spec.algebra.relations = vec!["^2x".into()];
    let path = write_spec(&dir, "rel.spec", &spec);
    let o = bin().arg("validate").arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(
        err.contains("/algebra/relations/0") && err.contains("offset 0"),
        "{err}"
    );
}

#[test]
fn unknown_key_is_rejected_with_pointer_and_position() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(preset_file("trivial"))
        .unwrap()
        .replace("conductor = 4", "conductor = 4\ncolour = 1");
    let path = dir.path().join("unknown.spec");
    std::fs::write(&path, text).unwrap();
    let o = bin().arg("analyze").arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(
        err.contains("unknown.spec:3:1") && err.contains("/field/colour"),
        "{err}"
    );
}

#[test]
fn syntax_error_has_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("syntax.spec");
    std::fs::write(&path, "[field]\nconductor = [1,\n").unwrap();
    let o = bin().arg("validate").arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("syntax.spec:2:"), "{}", stderr(&o));
}

#[test]
fn missing_file_exits_2() {
    let o = bin()
        .args(["validate", "/nonexistent/x.spec"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn max_degree_from_environment_and_flag() {
    let file = preset_file("l41-mystic-1-2");
    let o = bin()
        .env("NCREFLECT_MAX_DEGREE", "5")
        .args(["analyze", "--format", "machine"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(Report::from_machine(&stdout(&o)).unwrap().max_degree, 5);
    let o = bin()
        .env("NCREFLECT_MAX_DEGREE", "5")
        .args(["analyze", "--format", "machine", "--max-degree", "7"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(Report::from_machine(&stdout(&o)).unwrap().max_degree, 7);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("e22.report");
    let o = bin()
        .args([
            "analyze",
            "--format",
            "machine",
            "--max-degree",
            "6",
            "--out",
        ])
        .arg(&out)
        .arg(preset_file("e22"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let r = Report::from_machine(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r.format, ncreflect::report::FORMAT_VERSION);
    assert_eq!(r.max_degree, 6);
}

#[test]
fn divisors_command_on_e42() {
    let o = bin()
        .args([
            "divisors",
            "--max-degree",
            "6",
            "--element",
            "u*v*(u^2 - v^2)",
            "--side",
            "left",
        ])
        .arg(preset_file("e42"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("element: u^3*v + u*v^3"), "{text}");
    assert!(
        text.contains("left (certificate): u, v, u + z8^3*v, u - z8^3*v"),
        "{text}"
    );
    assert!(!text.contains("right"), "{text}");
}

#[test]
fn divisors_command_rejects_bad_element() {
    let o = bin()
        .args(["divisors", "--element", "u*"])
        .arg(preset_file("e42"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn preset_list_names_every_entry() {
    let o = bin().args(["preset", "list"]).output().unwrap();
    let text = stdout(&o);
    for name in presets::CATALOGUE {
        assert!(text.contains(name), "{name} missing from {text}");
    }
}

#[test]
fn preset_spec_round_trips() {
    let o = bin()
        .args(["preset", "spec", "l41-mystic(2,4)"])
        .output()
        .unwrap();
    let spec = specfile::parse_str(&stdout(&o), "stdout").unwrap();
    assert_eq!(spec, presets::load("l41-mystic(2,4)").unwrap());
    let o = bin().args(["preset", "spec", "nonsense"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn preset_run_is_byte_stable() {
    let run = || {
        bin()
            .args(["preset", "run", "e42-kacpalyutkin", "--format", "machine"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(
        stderr(&a).contains("golden report matches"),
        "{}",
        stderr(&a)
    );
    assert!(
        stderr(&a).contains("all expected values match"),
        "{}",
        stderr(&a)
    );
}

#[test]
fn preset_run_at_other_degree_skips_golden() {
    let o = bin()
        .args(["preset", "run", "trivial", "--max-degree", "4"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stderr(&o).contains("golden comparison skipped"),
        "{}",
        stderr(&o)
    );
}
