//! Acceptance criteria for the catalogue at truncation degree 12. Prints one
//! verdict line per criterion and exits nonzero on any unexpected result.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ncreflect::analysis;
use ncreflect::fixtures::{self, Provenance};
use ncreflect::report::{Report, Status};
use ncreflect_core::hopf::{ActionKind, HopfData};
use ncreflect_core::input::{ActionSpec, LoadError, Problem};
use ncreflect_core::invariants::components;
use ncreflect_core::linalg::SparseVec;
use ncreflect_core::ncalg::{brute_force_hilbert, Presentation, Side};
use ncreflect_core::presets;
use ncreflect_core::smash::{radical_ideal, radical_shortcut};
use ncreflect_core::Scalar;

const D: u32 = 12;
const TIME_LIMIT: Duration = Duration::from_secs(60);

/// Sub-items that cannot hold for the shipped data. A criterion listed here is
/// reported as a known failure only if exactly these sub-items fail.
const KNOWN_FAILURES: &[(u32, &[&str])] = &[(
    3,
    &["R central in A (y*x^2 = z^2*y, so x^2 is not central)"],
)];

#[derive(Default)]
struct Verdict {
    failures: Vec<String>,
}

impl Verdict {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures
                .push(format!("{what}: expected {want:?}, got {got:?}"));
        }
    }
}

struct Run {
    p: Problem,
    report: Report,
}

impl Run {
    fn new(name: &str) -> Run {
        let spec = presets::load(name).unwrap();
        let p = spec.load(Some(D)).unwrap();
        let report = analysis::analyze_problem(&p, name);
        Run { p, report }
    }

    /// Whether the printed polynomial `got` equals `want` up to a nonzero scalar.
    fn prop(&self, got: Option<&str>, want: &str) -> bool {
        let alg = self.p.alg();
        match got {
            Some(g) => alg
                .parse(g)
                .unwrap()
                .proportional(&alg.parse(want).unwrap()),
            None => false,
        }
    }

    /// Whether `got` and `want` are the same set of lines up to scalars.
    fn same_lines(&self, got: &[String], want: &[&str]) -> bool {
        let alg = self.p.alg();
        let want: Vec<_> = want.iter().map(|w| alg.parse(w).unwrap()).collect();
        got.len() == want.len()
            && got.iter().all(|g| {
                let g = alg.parse(g).unwrap();
                want.iter().filter(|w| w.proportional(&g)).count() == 1
            })
    }

    fn lines(&self, element: &str, side: &str) -> Vec<String> {
        self.report
            .divisors
            .iter()
            .find(|d| d.element == element && d.side == side)
            .map(|d| d.lines.clone())
            .unwrap_or_default()
    }

    fn component(&self, ch: &str) -> Option<&ncreflect::report::ComponentEntry> {
        self.report.components.iter().find(|c| c.character == ch)
    }

    fn j(&self) -> Option<&str> {
        self.report.jacobian.as_ref().map(|j| j.j.as_str())
    }

    fn a(&self) -> Option<&str> {
        self.report.arrangement.as_ref().map(|a| a.a.as_str())
    }

    fn passed(&self, check: &str) -> bool {
        self.report
            .check(check)
            .is_some_and(|c| c.status == Status::Pass)
    }
}

/// Coefficients of `∏ factors` truncated to `len` terms.
fn product(factors: &[&[i64]], len: usize) -> Vec<i64> {
    let mut acc = vec![0i64; len];
    acc[0] = 1;
    for f in factors {
        let mut next = vec![0i64; len];
        for (k, &a) in acc.iter().enumerate() {
            for (m, &b) in f.iter().enumerate() {
                if k + m < len {
                    next[k + m] += a * b;
                }
            }
        }
        acc = next;
    }
    acc
}

/// Coefficients of `∏ 1/(1 - t^d)` truncated to `len` terms.
fn polynomial_ring_series(degrees: &[u32], len: usize) -> Vec<usize> {
    let mut acc = vec![0usize; len];
    acc[0] = 1;
    for &d in degrees {
        for k in d as usize..len {
            acc[k] += acc[k - d as usize];
        }
    }
    acc
}

fn criterion_1(v: &mut Verdict) {
    let r = Run::new("e42-kacpalyutkin");
    let rep = &r.report;
    v.eq(
        rep.hdet.as_ref().map(|h| h.inverse.as_str()),
        Some("gg'"),
        "hdet inverse",
    );
    v.expect(r.prop(r.j(), "u*v*(u^2 - v^2)"), "j = uv(u^2 - v^2)");
    v.expect(r.prop(r.a(), "u*v*(u^2 - v^2)"), "a = uv(u^2 - v^2)");
    let delta = rep.discriminant.as_ref().and_then(|d| d.delta.as_deref());
    v.expect(
        r.prop(delta, "u^2*v^2*(u^2 - v^2)^2"),
        "delta = u^2 v^2 (u^2 - v^2)^2",
    );
    for (ch, gen) in [
        ("eps", "1"),
        ("g", "u^2 - v^2"),
        ("g'", "u*v"),
        ("gg'", "u*v*(u^2 - v^2)"),
    ] {
        let c = r.component(ch);
        v.expect(
            r.prop(c.and_then(|c| c.generator.as_deref()), gen),
            format!("f_{ch} = {gen}"),
        );
        v.eq(
            c.map(|c| c.freeness.as_str()),
            Some("verified to degree 12"),
            &format!("p_{ch} A free of rank one"),
        );
    }
    v.eq(
        rep.xi.coefficients.clone(),
        product(&[&[1, 1], &[1, 1, 1, 1]], D as usize + 1),
        "xi",
    );
    v.eq(
        rep.covariant.algebra_series.as_str(),
        "1 + 2*t + 2*t^2",
        "covariant algebra series",
    );
    v.expect(!rep.covariant.tepid, "not tepid");
    let even: Vec<usize> = (0..=D as usize)
        .map(|d| if d % 2 == 0 { d + 1 } else { 0 })
        .collect();
    v.eq(
        rep.hilbert.isotypic.a_g.clone(),
        even,
        "A_G = even-degree subalgebra",
    );
    let sum: Vec<usize> = (0..=D as usize)
        .map(|d| rep.components.iter().map(|c| c.dims[d]).sum())
        .collect();
    v.eq(
        sum,
        rep.hilbert.isotypic.a_g.clone(),
        "A_G is the sum of the four components",
    );
}

fn criterion_2(v: &mut Verdict) {
    let r = Run::new("e42-kacpalyutkin");
    let alg = r.p.alg();
    let rad = radical_ideal(&r.p.action, &r.p.integral);
    let w = alg.parse("u*v*(u^4 - v^4)").unwrap();
    let aw = alg.ideal_slices(std::slice::from_ref(&w), Side::Left);
    for d in 0..6u32 {
        v.expect(
            rad.slices.slice(d).is_zero(),
            format!("e42 radical vanishes in degree {d}"),
        );
    }
    for d in 6..=D {
        v.expect(
            rad.slices.slice(d) == aw.slice(d),
            format!("e42 radical = A uv(u^4 - v^4) in degree {d}"),
        );
        v.eq(
            rad.slices.slice(d).dim(),
            d as usize - 5,
            &format!("e42 radical dimension in degree {d}"),
        );
    }
    let gen = r.report.dis_radical.generator.as_deref();
    v.expect(
        r.prop(gen, "u^2*v^2*(u^2 - v^2)^2*(u^2 + v^2)"),
        "dis-radical generator = delta (u^2 + v^2)",
    );

    let e22 = Run::new("e22-dualD8");
    let alg = e22.p.alg();
    let rad = radical_ideal(&e22.p.action, &e22.p.integral);
    let zxy = alg.ideal_slices(&[alg.parse("z*x*y").unwrap()], Side::TwoSided);
    v.expect(rad.slices == zxy, "e22 radical = (zxy)");

    let du = Run::new("e23-downup-dualD8");
    let alg = du.p.alg();
    let rad = radical_ideal(&du.p.action, &du.p.integral);
    let u2 = alg.ideal_slices(&[alg.parse("u^2").unwrap()], Side::TwoSided);
    v.expect(
        rad.slices.is_subspace_of(&u2),
        "down-up radical inside (u^2)",
    );
    let differing: Vec<u32> = (2..=10)
        .filter(|&d| rad.slices.slice(d) != u2.slice(d))
        .collect();
    v.expect(
        !differing.is_empty(),
        "down-up radical differs from (u^2) somewhere in degrees 2..10",
    );
    for d in differing {
        v.expect(
            rad.slices.slice(d).dim() < u2.slice(d).dim(),
            format!("down-up strict containment in degree {d}"),
        );
    }
}

fn criterion_3(v: &mut Verdict) {
    let r = Run::new("e22-dualD8");
    let rep = &r.report;
    let degrees: Vec<u32> = rep
        .hilbert
        .fixed_ring_generators
        .iter()
        .map(|g| g.degree)
        .collect();
    v.eq(degrees, vec![2, 2, 2], "R generator degrees");
    v.expect(rep.hilbert.polynomial_certificate, "polynomial certificate");
    v.eq(
        rep.hdet.as_ref().map(|h| h.character.as_str()),
        Some("rp3"),
        "hdet",
    );
    let hdet_values = rep
        .verification
        .characters
        .iter()
        .find(|c| c.name == "rp3")
        .map(|c| c.values.clone());
    let basis = &rep.verification.hopf_basis;
    let delta: Vec<String> = basis
        .iter()
        .map(|b| {
            if b == "p[rp3]" {
                "1".into()
            } else {
                "0".into()
            }
        })
        .collect();
    v.eq(
        hdet_values,
        Some(delta),
        "hdet evaluates to 1 exactly on the dual basis vector of r rho^3",
    );
    v.expect(r.prop(r.j(), "z*x*y"), "j = zxy");
    v.expect(r.prop(r.a(), "z*x*y"), "a = zxy");
    let disc = rep.discriminant.as_ref();
    v.expect(
        r.prop(disc.and_then(|d| d.delta.as_deref()), "x^2*y^2*z^2"),
        "delta = x^2 y^2 z^2",
    );
    for side in ["left", "right"] {
        v.expect(
            r.same_lines(&r.lines("j", side), &["x", "y", "z"]),
            format!("{side} divisors of j = {{x, y, z}}"),
        );
    }
    v.expect(rep.covariant.tepid, "tepid");
    let gens: Vec<&str> = rep
        .hilbert
        .fixed_ring_generators
        .iter()
        .map(|g| g.element.as_str())
        .collect();
    v.eq(gens, vec!["x^2", "y^2", "z^2"], "R generators t1, t2, t3");
    let trace = disc.and_then(|d| d.trace.as_ref());
    v.eq(
        trace.map(|t| t.determinant.as_str()),
        Some("t1^4*t2^4*t3^4"),
        "trace discriminant = x^8 y^8 z^8",
    );
    v.eq(
        trace.and_then(|t| t.radical_equal),
        Some(true),
        "radical-equivalence chain",
    );
    v.expect(
        trace.is_some_and(|t| t.r_central),
        "R central in A (y*x^2 = z^2*y, so x^2 is not central)",
    );
}

fn criterion_4(v: &mut Verdict) {
    let c = Run::new("l41-cyclic-n-m(z3,2,3)");
    v.expect(c.prop(c.j(), "x*y^2"), "cyclic: j = x y^2");
    v.expect(c.prop(c.a(), "x*y"), "cyclic: a = xy");
    for el in ["j", "a"] {
        for side in ["left", "right"] {
            v.expect(
                c.same_lines(&c.lines(el, side), &["x", "y"]),
                format!("cyclic: {side} divisors of {el}"),
            );
        }
    }
    let m12 = Run::new("l41-mystic(1,2)");
    v.expect(m12.prop(m12.j(), "x^2 - y^2"), "mystic(1,2): j = x^2 - y^2");
    v.expect(m12.prop(m12.a(), "x^2 - y^2"), "mystic(1,2): a = x^2 - y^2");
    let m24 = Run::new("l41-mystic(2,4)");
    v.expect(
        m24.prop(m24.j(), "x*y*(x^4 - y^4)"),
        "mystic(2,4): j = xy(x^4 - y^4)",
    );
    v.expect(
        m24.prop(m24.a(), "x*y*(x^4 - y^4)"),
        "mystic(2,4): a = xy(x^4 - y^4)",
    );
    let want = ["x", "y", "x + y", "x + z4*y", "x + z4^2*y", "x + z4^3*y"];
    for side in ["left", "right"] {
        v.expect(
            m24.same_lines(&m24.lines("j", side), &want),
            format!("mystic(2,4): {side} divisors of j"),
        );
    }
}

fn criterion_5(v: &mut Verdict) {
    let r = Run::new("e42-kacpalyutkin");
    let left = r.lines("j", "left");
    let right = r.lines("j", "right");
    v.expect(
        r.same_lines(&left, &["u", "v", "u + z8^3*v", "u + z8^7*v"]),
        format!("left divisors {left:?}"),
    );
    v.expect(
        r.same_lines(&right, &["u", "v", "u + z8*v", "u + z8^5*v"]),
        format!("right divisors {right:?}"),
    );
    let l: BTreeSet<_> = left.iter().collect();
    let rt: BTreeSet<_> = right.iter().collect();
    v.expect(l != rt, "left and right divisor sets differ");
    v.eq(l.intersection(&rt).count(), 2, "shared lines");
}

fn criterion_6(v: &mut Verdict) {
    const SUITE: &[&str] = &[
        "component-products",
        "discriminant-sides-agree",
        "arrangement-divides-jacobian",
        "divisors-contain-degree-one-components",
        "cocycles-normal",
        "frobenius-pairing-nondegenerate",
        "frobenius-factorizations",
    ];
    for f in fixtures::FIXTURES {
        let name = f.preset;
        let r = Run::new(name);
        let hypotheses_hold = r.report.exit_code != 4;
        for check in SUITE {
            match r.report.check(check) {
                Some(c) if c.status == Status::Pass => {}
                Some(c) if !hypotheses_hold && c.detail == "outside the hypotheses" => {}
                Some(c) => v.expect(
                    false,
                    format!("{name}: {check} {} {}", c.status.name(), c.detail),
                ),
                None => v.expect(false, format!("{name}: {check} missing")),
            }
        }
        if matches!(r.p.action.kind, ActionKind::DualGroup { .. }) {
            v.expect(
                r.passed("steinberg-factorization"),
                format!("{name}: steinberg-factorization"),
            );
        }
    }
    let e42 = Run::new("e42-kacpalyutkin");
    v.expect(e42.passed("jacobian-transfer"), "e42: jacobian-transfer");
}

fn criterion_7(v: &mut Verdict) {
    let spec = presets::load("e42-kacpalyutkin").unwrap();
    let mu = spec.options.nakayama.clone().unwrap_or_default();
    v.eq(mu.get("u").map(String::as_str), Some("-i*u"), "mu(u)");
    v.eq(mu.get("v").map(String::as_str), Some("i*v"), "mu(v)");
    let r = Run::new("e42-kacpalyutkin");
    let n = r.report.nakayama.as_ref();
    v.expect(n.is_some_and(|n| n.automorphism), "mu is an automorphism");
    v.expect(
        n.is_some_and(|n| n.winding_identity),
        "winding identity to degree 4",
    );
    v.expect(
        n.is_some_and(|n| n.mu_j_proportional),
        "mu(j) proportional to j",
    );
    v.expect(
        n.is_some_and(|n| n.mu_r_identity),
        "eta_j mu = identity on R generators",
    );
    v.eq(
        n.and_then(|n| n.index.clone()),
        Some(vec![6, 2, 4]),
        "index 6 = 2 + 4",
    );
    for c in [
        "nakayama-winding-identity",
        "nakayama-jacobian",
        "nakayama-fixed-ring-identity",
        "nakayama-index",
    ] {
        v.expect(r.passed(c), c);
    }
}

/// `(re + im·i)/den`.
fn gaussian(re: i64, im: i64, den: i64) -> Scalar {
    &(&Scalar::from_int(re) + &(&Scalar::i() * &Scalar::from_int(im))) * &Scalar::from_ratio(1, den)
}

fn h_elem(h: &HopfData, terms: &[(&str, i64, i64)]) -> SparseVec {
    SparseVec::from_entries(
        terms
            .iter()
            .map(|(l, re, im)| (h.index_of(l).unwrap(), gaussian(*re, *im, 8)))
            .collect(),
    )
}

fn criterion_8(v: &mut Verdict) {
    let p = presets::e42_kac_palyutkin().load(Some(4)).unwrap();
    let h = p.hopf();
    let axioms = h.verify();
    v.expect(
        axioms.passed(),
        format!("Hopf axioms: {:?}", axioms.failures()),
    );
    let all = |s: [(i64, i64); 8]| -> Vec<(&'static str, i64, i64)> {
        ["e", "x", "y", "xy", "z", "xz", "yz", "xyz"]
            .iter()
            .zip(s)
            .map(|(l, (a, b))| (*l, a, b))
            .collect()
    };
    let p1 = h_elem(h, &all([(1, 0); 8]));
    v.expect(
        p.integral == p1,
        "integral = (1 + x + y + xy + z + xz + yz + xyz)/8",
    );
    let formulas = [
        ("eps", p1.clone()),
        (
            "g",
            h_elem(
                h,
                &all([
                    (1, 0),
                    (1, 0),
                    (1, 0),
                    (1, 0),
                    (-1, 0),
                    (-1, 0),
                    (-1, 0),
                    (-1, 0),
                ]),
            ),
        ),
        (
            "g'",
            h_elem(
                h,
                &all([
                    (1, 0),
                    (-1, 0),
                    (-1, 0),
                    (1, 0),
                    (0, 1),
                    (0, -1),
                    (0, -1),
                    (0, 1),
                ]),
            ),
        ),
        (
            "gg'",
            h_elem(
                h,
                &all([
                    (1, 0),
                    (-1, 0),
                    (-1, 0),
                    (1, 0),
                    (0, -1),
                    (0, 1),
                    (0, 1),
                    (0, -1),
                ]),
            ),
        ),
    ];
    v.eq(p.chars.len(), 4, "four grouplikes");
    let mut derived = Vec::new();
    for (name, e) in &formulas {
        v.expect(h.mul(e, e) == *e, format!("p_{name} idempotent"));
        // The character is read off from b·p_g = χ(b) p_g.
        let values: Vec<Scalar> = (0..h.dim())
            .map(|k| {
                let be = h.mul(&SparseVec::unit(k), e);
                let (i, c) = e.leading().unwrap();
                be.get(i)
                    .cloned()
                    .unwrap_or_else(Scalar::zero)
                    .checked_div(c)
                    .unwrap()
            })
            .collect();
        for (k, value) in values.iter().enumerate() {
            v.expect(
                h.mul(&SparseVec::unit(k), e) == e.scale(value),
                format!("p_{name} is an eigenvector"),
            );
        }
        let supplied = p
            .chars
            .chars
            .iter()
            .find(|c| c.name == *name)
            .map(|c| c.values.clone());
        v.eq(
            supplied.as_ref(),
            Some(&values),
            &format!("character {name}"),
        );
        derived.push(values);
    }
    let eps: Vec<Scalar> = (0..h.dim())
        .map(|k| h.counit_of(&SparseVec::unit(k)))
        .collect();
    for a in &derived {
        v.expect(h.convolve(a, a) == eps, "every grouplike squares to 1");
        for b in &derived {
            v.expect(
                derived.contains(&h.convolve(a, b)),
                "grouplikes closed under products",
            );
        }
    }
    let mut spec = presets::e42_kac_palyutkin();
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
    match spec.load(Some(4)) {
        Err(LoadError::Verification(msg)) => {
            v.expect(msg.contains("fails at"), format!("witness in {msg:?}"))
        }
        other => v.expect(
            false,
            format!("corrupted coproduct accepted: {:?}", other.map(|_| ())),
        ),
    }
}

/// A presentation typed independently of the preset catalogue.
struct Graded {
    preset: &'static str,
    gens: &'static [(&'static str, u32)],
    rels: &'static [&'static str],
}

fn criterion_9(v: &mut Verdict) {
    let cases = [
        (
            Graded {
                preset: "e42-kacpalyutkin",
                gens: &[("u", 1), ("v", 1)],
                rels: &["v*u - i*u*v"],
            },
            6,
        ),
        (
            Graded {
                preset: "e22-dualD8",
                gens: &[("x", 1), ("y", 1), ("z", 1)],
                rels: &["z*x + x*z", "y*x - z*y", "y*z - x*y"],
            },
            6,
        ),
        (
            Graded {
                preset: "e23-downup-dualD8",
                gens: &[("u", 1), ("d", 1)],
                rels: &["u*u*d - d*u*u", "u*d*d - d*d*u"],
            },
            8,
        ),
    ];
    for (g, d) in &cases {
        let oracle = brute_force_hilbert(&Presentation::parse(g.gens, g.rels).unwrap(), *d);
        let r = Run::new(g.preset);
        v.eq(
            &r.report.hilbert.algebra[..=*d as usize],
            &oracle[..],
            &format!("{}: h_A", g.preset),
        );
        if g.preset == "e23-downup-dualD8" {
            v.eq(oracle, vec![1, 2, 4, 6, 9, 12, 16, 20, 25], "down-up h_A");
        }
    }
    for name in ["trivial", "e22-dualD8", "e23-downup-dualD8"] {
        let p = presets::load(name).unwrap().load(Some(D)).unwrap();
        let table = components(&p.action, &p.chars);
        let rad = radical_ideal(&p.action, &p.integral);
        v.expect(
            radical_shortcut(&p.action, &table).as_ref() == Some(&rad.slices),
            format!("{name}: shortcut = radical"),
        );
    }
    // Derived Hilbert coefficients in the fixtures, recomputed from a
    // presentation of R as a commutative polynomial ring.
    for f in fixtures::FIXTURES {
        let expect = f.expectations();
        for e in expect
            .expect
            .iter()
            .filter(|e| e.provenance == Provenance::Derived)
        {
            let r = Run::new(f.preset);
            let len = D as usize + 1;
            match e.field.as_str() {
                "hilbert.fixed_ring" => {
                    let gens: Vec<(String, u32)> = r
                        .report
                        .hilbert
                        .fixed_ring_generators
                        .iter()
                        .map(|g| (g.name.clone(), g.degree))
                        .collect();
                    let named: Vec<(&str, u32)> =
                        gens.iter().map(|(n, d)| (n.as_str(), *d)).collect();
                    let rels: Vec<String> = (0..gens.len())
                        .flat_map(|a| (a + 1..gens.len()).map(move |b| (a, b)))
                        .map(|(a, b)| {
                            format!("{}*{} - {}*{}", gens[b].0, gens[a].0, gens[a].0, gens[b].0)
                        })
                        .collect();
                    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
                    let oracle =
                        brute_force_hilbert(&Presentation::parse(&named, &rels).unwrap(), D);
                    let degrees: Vec<u32> = gens.iter().map(|g| g.1).collect();
                    v.eq(
                        &oracle,
                        &polynomial_ring_series(&degrees, len),
                        &format!("{}: R series", f.preset),
                    );
                    let want: Vec<usize> = e
                        .value
                        .as_array()
                        .unwrap()
                        .iter()
                        .map(|x| x.as_integer().unwrap() as usize)
                        .collect();
                    v.eq(&oracle, &want, &format!("{}: {}", f.preset, e.field));
                    v.eq(
                        &r.report.hilbert.fixed_ring,
                        &want,
                        &format!("{}: report {}", f.preset, e.field),
                    );
                }
                "xi.series" => {
                    // xi = h_A · ∏ (1 - t^{d_i}) with h_A from the brute-force quotient.
                    let oracle_a = brute_force_hilbert(r.p.alg().presentation(), 7);
                    let mut xi: Vec<i64> = oracle_a.iter().map(|&c| c as i64).collect();
                    for g in &r.report.hilbert.fixed_ring_generators {
                        let mut f = vec![0i64; g.degree as usize + 1];
                        f[0] = 1;
                        f[g.degree as usize] = -1;
                        xi = product(&[&xi, &f], xi.len());
                    }
                    v.eq(
                        &r.report.xi.coefficients[..xi.len()],
                        &xi[..],
                        &format!("{}: xi from brute force", f.preset),
                    );
                }
                _ => {}
            }
        }
    }
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, fn(&mut Verdict));
    let criteria: [Criterion; 9] = [
        (1, "Kac-Palyutkin invariants", criterion_1),
        (2, "radical ideals", criterion_2),
        (3, "dual D8 on the three-generator algebra", criterion_3),
        (4, "quantum-plane families", criterion_4),
        (5, "divisor asymmetry", criterion_5),
        (6, "property suite", criterion_6),
        (7, "Nakayama checks", criterion_7),
        (8, "Hopf verification", criterion_8),
        (9, "oracle equivalence", criterion_9),
    ];
    let mut ok = true;
    for (n, title, f) in criteria {
        let start = Instant::now();
        let mut v = Verdict::default();
        if let Err(e) = catch_unwind(AssertUnwindSafe(|| f(&mut v))) {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            v.failures.push(format!("panicked: {msg}"));
        }
        let elapsed = start.elapsed();
        if elapsed > TIME_LIMIT {
            v.failures.push(format!("took {elapsed:?}"));
        }
        let known = KNOWN_FAILURES.iter().find(|k| k.0 == n).map(|k| k.1);
        let line = match known {
            None if v.failures.is_empty() => "pass".to_string(),
            None => {
                ok = false;
                format!("FAIL: {}", v.failures.join("; "))
            }
            Some(expected)
                if v.failures
                    .iter()
                    .map(String::as_str)
                    .eq(expected.iter().copied()) =>
            {
                format!("known failure: {}", v.failures.join("; "))
            }
            Some(_) if v.failures.is_empty() => {
                ok = false;
                "FAIL: passes but is listed as a known failure".to_string()
            }
            Some(_) => {
                ok = false;
                format!("FAIL: {}", v.failures.join("; "))
            }
        };
        println!(
            "criterion {n} ({title}): {line} [{:.1}s]",
            elapsed.as_secs_f64()
        );
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
