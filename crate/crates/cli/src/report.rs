//! The report document: machine form (TOML) and human-readable text.
//!
//! Polynomials are printed with leading coefficient 1; they are determined up
//! to a nonzero scalar, which the `scalar_class` fields record.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Bumped whenever the machine layout changes.
pub const FORMAT_VERSION: &str = "ncreflect-report/1";

/// Marker for polynomials normalized to leading coefficient 1.
pub const UP_TO_SCALAR: &str = "nonzero scalar";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Structure of the input (Hopf axioms, module algebra).
    Verification,
    /// Evidence for a standing hypothesis on the input.
    Hypothesis,
    /// Consequence of the theory under the hypotheses.
    Theorem,
    /// Reported fact with no pass/fail consequence.
    Observation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn from_bool(b: bool) -> Status {
        if b {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub status: Status,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub name: String,
    /// Values on the Hopf basis, in basis order.
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub hopf_dimension: usize,
    pub hopf_basis: Vec<String>,
    pub integral: String,
    pub characters: Vec<CharacterEntry>,
    pub hopf_rife: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isotypic {
    /// `A_G = ⊕_g A_g`.
    pub a_g: Vec<usize>,
    pub a_g_complement: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_a_g: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_a_g_complement: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub idempotents: Vec<IdempotentImage>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentImage {
    pub name: String,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hilbert {
    pub algebra: Vec<usize>,
    pub algebra_series: String,
    pub fixed_ring: Vec<usize>,
    pub fixed_ring_generators: Vec<Generator>,
    pub polynomial_certificate: bool,
    pub fixed_ring_commutative: bool,
    pub isotypic: Isotypic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub character: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    pub lowest_dim: usize,
    pub dims: Vec<usize>,
    /// `verified to degree D` or the first degree where `f_g R` misses the slice.
    pub freeness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HdetMethodEntry {
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HdetSection {
    pub character: String,
    pub inverse: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub koszul_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub koszul_top: Option<String>,
    pub methods: Vec<HdetMethodEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianSection {
    pub j: String,
    pub scalar_class: String,
    pub degree: u32,
    pub character: String,
    /// Characters `h₁, h₂, …` with `j ∝ f_{h₁} f_{h₂} ⋯`, for dual-group actions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steinberg_factorization: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementSection {
    pub a: String,
    pub scalar_class: String,
    pub degree: u32,
    pub character: String,
    pub equals_jacobian: bool,
    pub left_divides_jacobian: bool,
    pub right_divides_jacobian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceSection {
    pub determinant: String,
    pub closed_form: String,
    pub proportional: bool,
    pub r_central: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical_equal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    pub scalar_class: String,
    /// `δ` as a polynomial in the fixed-ring generators `t1, t2, …`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub in_generators: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sides_proportional: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub in_fixed_ring: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiSection {
    pub series: String,
    pub coefficients: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovariantSection {
    pub left_series: String,
    pub right_series: String,
    pub algebra_series: String,
    pub tepid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing_nondegenerate: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalSection {
    pub dims: Vec<usize>,
    pub pertinency_dims: Vec<usize>,
    /// `dim (A#H/𝒫)_d`.
    pub quotient_dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal_generator: Option<String>,
    pub scalar_class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lowest_degree: Option<u32>,
    /// Whether `ℛ ⊆ A·j`, slice by slice.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inside_left_ideal_of_j: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j_normal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action_rife: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shortcut_equal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisRadicalSection {
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    pub scalar_class: String,
    pub principal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorEntry {
    /// `j` or `a`.
    pub element: String,
    pub side: String,
    pub mode: String,
    pub lines: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    pub residual_warning: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakayamaSection {
    pub automorphism: bool,
    pub winding_identity: bool,
    pub preserves_fixed_ring: bool,
    pub mu_j_proportional: bool,
    pub mu_a_proportional: bool,
    /// `μ_R` on the fixed-ring generators.
    pub mu_r: Vec<String>,
    pub mu_r_identity: bool,
    /// `[ℓ_R, ℓ_A, deg j]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format: String,
    pub input: String,
    pub max_degree: u32,
    pub conductor: u32,
    pub exit_code: i32,
    pub verification: Verification,
    pub hilbert: Hilbert,
    pub components: Vec<ComponentEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hdet: Option<HdetSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jacobian: Option<JacobianSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<ArrangementSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<DiscriminantSection>,
    pub xi: XiSection,
    pub covariant: CovariantSection,
    pub radical: RadicalSection,
    pub dis_radical: DisRadicalSection,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub divisors: Vec<DivisorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nakayama: Option<NakayamaSection>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// 0 when every hard check passes; otherwise the class of the first failure by priority.
    pub fn compute_exit_code(checks: &[Check]) -> i32 {
        let failed = |k: CheckKind| {
            checks
                .iter()
                .any(|c| c.kind == k && c.status == Status::Fail)
        };
        if failed(CheckKind::Verification) {
            3
        } else if failed(CheckKind::Hypothesis) {
            4
        } else if failed(CheckKind::Theorem) {
            5
        } else {
            0
        }
    }

    pub fn to_machine(&self) -> String {
        crate::specfile::layout(&toml::to_string(self).expect("reports serialize"))
    }

    pub fn from_machine(text: &str) -> Result<Report, toml::de::Error> {
        toml::from_str(text)
    }

    /// Look up a field by a dotted path. Array elements are addressed by index
    /// or by the value of their `character`, `element` or `name` field; divisor
    /// entries accept `element/side`.
    pub fn field(&self, path: &str) -> Option<toml::Value> {
        let mut cur = toml::Value::try_from(self).ok()?;
        for seg in path.split('.') {
            cur = match cur {
                toml::Value::Table(mut t) => t.remove(seg)?,
                toml::Value::Array(items) => match seg.parse::<usize>() {
                    Ok(k) => items.into_iter().nth(k)?,
                    Err(_) => items.into_iter().find(|v| key_matches(v, seg))?,
                },
                _ => return None,
            };
        }
        Some(cur)
    }

    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let w = &mut o;
        let _ = writeln!(w, "ncreflect report ({})", self.format);
        let _ = writeln!(w, "input: {}", self.input);
        let _ = writeln!(
            w,
            "truncation degree: {}   conductor: {}",
            self.max_degree, self.conductor
        );
        let _ = writeln!(w, "exit code: {}", self.exit_code);

        section(w, "verification");
        let v = &self.verification;
        let _ = writeln!(
            w,
            "  Hopf algebra of dimension {} on basis {}",
            v.hopf_dimension,
            v.hopf_basis.join(", ")
        );
        let _ = writeln!(w, "  integral: {}", v.integral);
        for c in &v.characters {
            let _ = writeln!(w, "  character {}: [{}]", c.name, c.values.join(", "));
        }
        let _ = writeln!(w, "  Hopf-rife: {}", yes(v.hopf_rife));

        section(w, "hilbert");
        let h = &self.hilbert;
        let _ = writeln!(w, "  dim A_d: {:?}", h.algebra);
        let _ = writeln!(w, "  h_A(t) = {} + ...", h.algebra_series);
        let _ = writeln!(w, "  dim R_d: {:?}", h.fixed_ring);
        for g in &h.fixed_ring_generators {
            let _ = writeln!(w, "  {} = {}   (degree {})", g.name, g.element, g.degree);
        }
        let _ = writeln!(
            w,
            "  polynomial certificate: {}",
            yes(h.polynomial_certificate)
        );
        let _ = writeln!(w, "  generators commute: {}", yes(h.fixed_ring_commutative));
        let _ = writeln!(w, "  dim (A_G)_d: {:?}", h.isotypic.a_g);
        let _ = writeln!(w, "  dim (A_G^c)_d: {:?}", h.isotypic.a_g_complement);
        if let (Some(a), Some(b)) = (h.isotypic.rank_a_g, h.isotypic.rank_a_g_complement) {
            let _ = writeln!(w, "  ranks over R: A_G {a}, A_G^c {b}");
        }
        for i in &h.isotypic.idempotents {
            let _ = writeln!(w, "  image of {}: {:?}", i.name, i.dims);
        }

        section(w, "components");
        for c in &self.components {
            match (&c.generator, c.degree) {
                (Some(g), Some(d)) => {
                    let _ = writeln!(
                        w,
                        "  A_{}: f = {}   (degree {d}, {})",
                        c.character, g, c.freeness
                    );
                }
                (None, Some(d)) => {
                    let _ = writeln!(
                        w,
                        "  A_{}: lowest slice of dimension {} in degree {d}",
                        c.character, c.lowest_dim
                    );
                }
                _ => {
                    let _ = writeln!(
                        w,
                        "  A_{}: zero up to degree {}",
                        c.character, self.max_degree
                    );
                }
            }
        }

        section(w, "hdet");
        match &self.hdet {
            Some(h) => {
                let _ = writeln!(w, "  hdet = {}   hdet^-1 = {}", h.character, h.inverse);
                if let (Some(d), Some(t)) = (h.koszul_degree, &h.koszul_top) {
                    let _ = writeln!(w, "  Koszul top in degree {d}: {t}");
                }
                for m in &h.methods {
                    let _ = writeln!(
                        w,
                        "  {}: {} ({})",
                        m.method,
                        m.result.as_deref().unwrap_or("-"),
                        m.note
                    );
                }
            }
            None => {
                let _ = writeln!(w, "  not determined");
            }
        }

        section(w, "jacobian");
        if let Some(j) = &self.jacobian {
            let _ = writeln!(
                w,
                "  j = {}   (up to {}, degree {}, in A_{})",
                j.j, j.scalar_class, j.degree, j.character
            );
            if let Some(f) = j.steinberg_factorization.as_ref().filter(|f| !f.is_empty()) {
                let _ = writeln!(w, "  j is a product of f over characters {}", f.join(", "));
            }
        }
        section(w, "arrangement");
        if let Some(a) = &self.arrangement {
            let _ = writeln!(
                w,
                "  a = {}   (up to {}, degree {}, in A_{})",
                a.a, a.scalar_class, a.degree, a.character
            );
            let _ = writeln!(w, "  a = j: {}", yes(a.equals_jacobian));
            let _ = writeln!(
                w,
                "  a divides j: left {}, right {}",
                yes(a.left_divides_jacobian),
                yes(a.right_divides_jacobian)
            );
        }
        section(w, "discriminant");
        if let Some(d) = &self.discriminant {
            if let Some(x) = &d.delta {
                let _ = writeln!(w, "  delta = {}   (up to {})", x, d.scalar_class);
            }
            if let Some(x) = &d.in_generators {
                let _ = writeln!(w, "  delta in fixed-ring generators: {x}");
            }
            if let Some(t) = &d.trace {
                let _ = writeln!(w, "  trace discriminant: {}", t.determinant);
                let _ = writeln!(w, "  product of f_(g^-1) f_g: {}", t.closed_form);
                let _ = writeln!(
                    w,
                    "  proportional: {}   R central: {}",
                    yes(t.proportional),
                    yes(t.r_central)
                );
                if let Some(r) = t.radical_equal {
                    let _ = writeln!(w, "  radicals agree: {}", yes(r));
                }
            }
        }
        section(w, "xi");
        let _ = writeln!(w, "  xi(t) = {}", self.xi.series);
        section(w, "covariant");
        let c = &self.covariant;
        let _ = writeln!(w, "  A/A R+: {}", c.left_series);
        let _ = writeln!(w, "  A/R+ A: {}", c.right_series);
        let _ = writeln!(w, "  A/(R+): {}", c.algebra_series);
        let _ = writeln!(w, "  tepid: {}", yes(c.tepid));
        if let Some(f) = c.frobenius {
            let _ = writeln!(w, "  covariant algebra Frobenius: {}", yes(f));
        }
        section(w, "radical");
        let r = &self.radical;
        let _ = writeln!(w, "  dim R_d (radical): {:?}", r.dims);
        let _ = writeln!(w, "  dim (A#H/P)_d: {:?}", r.quotient_dims);
        match &r.principal_generator {
            Some(g) => {
                let _ = writeln!(w, "  generated by {g}");
            }
            None => {
                let _ = writeln!(w, "  principal generator not determined");
            }
        }
        if let Some(b) = r.action_rife {
            let _ = writeln!(w, "  action rife: {}", yes(b));
        }
        if let Some(b) = r.inside_left_ideal_of_j {
            let _ = writeln!(w, "  contained in A j: {}", yes(b));
        }
        section(w, "dis_radical");
        let d = &self.dis_radical;
        let _ = writeln!(w, "  dims: {:?}", d.dims);
        if let Some(g) = &d.generator {
            let _ = writeln!(
                w,
                "  lowest element {} (principal: {})",
                g,
                yes(d.principal)
            );
        }
        section(w, "divisors");
        for e in &self.divisors {
            let _ = writeln!(
                w,
                "  {} {} ({}): {}",
                e.side,
                e.element,
                e.mode,
                e.lines.join(", ")
            );
            if let Some(cert) = &e.certificate {
                let _ = writeln!(w, "    certificate form: {cert}");
            }
            if e.residual_warning {
                let _ = writeln!(
                    w,
                    "    warning: residual factor {} may hide further divisors",
                    e.residual.as_deref().unwrap_or("?")
                );
            }
        }
        if let Some(n) = &self.nakayama {
            section(w, "nakayama");
            let _ = writeln!(
                w,
                "  automorphism: {}   winding identity: {}",
                yes(n.automorphism),
                yes(n.winding_identity)
            );
            let _ = writeln!(
                w,
                "  mu(R) = R: {}   mu(j) ~ j: {}   mu(a) ~ a: {}",
                yes(n.preserves_fixed_ring),
                yes(n.mu_j_proportional),
                yes(n.mu_a_proportional)
            );
            let _ = writeln!(w, "  mu_R: [{}]", n.mu_r.join(", "));
            if let Some(i) = &n.index {
                let _ = writeln!(w, "  l_R = {}, l_A = {}, deg j = {}", i[0], i[1], i[2]);
            }
        }
        section(w, "checks");
        for c in &self.checks {
            let kind = match c.kind {
                CheckKind::Verification => "verification",
                CheckKind::Hypothesis => "hypothesis",
                CheckKind::Theorem => "theorem",
                CheckKind::Observation => "observation",
            };
            let _ = write!(w, "  {}: {} [{kind}]", c.name, c.status.name());
            if !c.detail.is_empty() {
                let _ = write!(w, " {}", c.detail);
            }
            w.push('\n');
        }
        o
    }
}

fn key_matches(v: &toml::Value, seg: &str) -> bool {
    let Some(t) = v.as_table() else { return false };
    let get = |k: &str| t.get(k).and_then(|x| x.as_str());
    if let Some((e, s)) = seg.split_once('/') {
        return get("element") == Some(e) && get("side") == Some(s);
    }
    ["character", "name"].iter().any(|k| get(k) == Some(seg))
}

fn section(w: &mut String, name: &str) {
    let _ = writeln!(w, "\n[{name}]");
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
