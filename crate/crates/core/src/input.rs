//! Problem descriptions: the serializable input schema and its translation
//! into verified models.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf::{
    character_group, character_idempotent, check_idempotents, dual_group_characters,
    generate_matrix_group, linear_characters, ActionKind, ActionModel, Character, CharacterGroup,
    FiniteGroup, HopfData, HopfError,
};
use crate::linalg::{Matrix, SparseVec};
use crate::ncalg::{AlgebraError, Elem, GradedAlgebra, Presentation, DEFAULT_MAX_DEGREE};
use crate::poly::{parse_poly, NCPoly};
use crate::scalars::Scalar;

/// Upper bound on matrix-group closure.
pub const GROUP_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub field: FieldSpec,
    pub algebra: AlgebraSpec,
    pub action: ActionSpec,
    #[serde(default, skip_serializing_if = "OptionsSpec::is_default")]
    pub options: OptionsSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    /// Working conductor `N`: every scalar lives in `Q(zeta_N)`.
    pub conductor: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub generators: Vec<GeneratorSpec>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
}

/// The acting Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ActionSpec {
    /// `H = kG` for the group generated by matrices on the generators.
    Group { generators: Vec<GroupGeneratorSpec> },
    /// `H = (kG)*` acting through a `G`-grading of the generators.
    DualGroup {
        elements: Vec<String>,
        /// `table[a][b]` is the name of the product of elements `a` and `b`.
        table: Vec<Vec<String>>,
        /// Group degree of every generator.
        degrees: BTreeMap<String, String>,
    },
    /// Raw structure constants.
    Table(TableSpec),
}

/// `matrix[i][j]` is the coefficient of generator `i` in the image of generator `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupGeneratorSpec {
    pub name: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    /// Basis labels (identifiers).
    pub basis: Vec<String>,
    /// `[label, coeff]` pairs.
    pub unit: Vec<Vec<String>>,
    /// `[left, right, result, coeff]`: `left·right` contains `coeff·result`.
    pub mult: Vec<Vec<String>>,
    /// `[source, left, right, coeff]`: `Δ(source)` contains `coeff·left⊗right`.
    pub comult: Vec<Vec<String>>,
    /// `[label, value]`; missing labels have counit 0.
    pub counit: Vec<Vec<String>>,
    /// `[source, target, coeff]`.
    pub antipode: Vec<Vec<String>>,
    /// Action of every basis element on the generators, in the column convention of [`GroupGeneratorSpec`].
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    pub characters: Vec<CharacterSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub idempotents: Vec<IdempotentSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterSpec {
    pub name: String,
    pub values: BTreeMap<String, String>,
}

/// A central idempotent written over the basis labels. When `character` is
/// set it must equal the idempotent `p_g` of that character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdempotentSpec {
    pub name: String,
    pub element: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hdet: Option<String>,
    /// Images of generators under a Nakayama automorphism.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nakayama: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub divisor_candidates: Vec<String>,
    #[serde(default, skip_serializing_if = "AssertionsSpec::is_default")]
    pub assertions: AssertionsSpec,
}

impl OptionsSpec {
    fn is_default(&self) -> bool {
        *self == OptionsSpec::default()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssertionsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub as_regular_fixed_ring: Option<bool>,
}

impl AssertionsSpec {
    fn is_default(&self) -> bool {
        *self == AssertionsSpec::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    /// Malformed input: unknown names, bad literals, inconsistent shapes.
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    /// Well-formed input whose structure fails verification.
    #[error("verification failed: {0}")]
    Verification(String),
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> LoadError {
    LoadError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

/// A loaded and verified problem.
#[derive(Clone, Debug)]
pub struct Problem {
    pub conductor: u32,
    pub action: ActionModel,
    pub chars: CharacterGroup,
    pub integral: SparseVec,
    /// Supplied central idempotents; the character index is set for `p_g`.
    pub idempotents: Vec<(String, SparseVec, Option<usize>)>,
    pub hdet: Option<usize>,
    pub nakayama: Option<Vec<NCPoly>>,
    pub divisor_candidates: Vec<Elem>,
    pub assertions: AssertionsSpec,
}

impl Problem {
    pub fn alg(&self) -> &GradedAlgebra {
        &self.action.alg
    }

    pub fn hopf(&self) -> &HopfData {
        &self.action.hopf
    }

    /// `p_g` for every character, derived from the integral.
    pub fn character_idempotents(&self) -> Vec<SparseVec> {
        self.chars
            .chars
            .iter()
            .map(|c| {
                character_idempotent(self.hopf(), &self.integral, &c.values)
                    .expect("verified character")
            })
            .collect()
    }
}

/// Parse a scalar literal and lift it to the working conductor.
pub fn parse_scalar(s: &str, conductor: u32, path: &str) -> Result<Scalar, LoadError> {
    let p = parse_poly(s, &[]).map_err(|e| schema(path, e.to_string()))?;
    let c = if p.is_zero() {
        Scalar::zero()
    } else if p.len() == 1 && p.terms().next().unwrap().0.is_empty() {
        p.terms().next().unwrap().1.clone()
    } else {
        return Err(schema(path, format!("`{s}` is not a scalar")));
    };
    lift(&c, conductor, path)
}

fn lift(c: &Scalar, conductor: u32, path: &str) -> Result<Scalar, LoadError> {
    let s = c.simplify();
    if !conductor.is_multiple_of(s.conductor()) {
        return Err(schema(
            path,
            format!(
                "scalar `{s}` needs conductor {} which does not divide {conductor}",
                s.conductor()
            ),
        ));
    }
    Ok(s.promote(conductor))
}

fn lift_poly(p: &NCPoly, conductor: u32, path: &str) -> Result<NCPoly, LoadError> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(w.clone(), lift(c, conductor, path)?);
    }
    Ok(out)
}

fn parse_matrix(
    rows: &[Vec<String>],
    n: usize,
    conductor: u32,
    path: &str,
) -> Result<Matrix, LoadError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(schema(path, format!("expected a {n}x{n} matrix")));
    }
    let mut dense = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for (j, s) in r.iter().enumerate() {
            row.push(parse_scalar(s, conductor, &format!("{path}[{i}][{j}]"))?);
        }
        dense.push(row);
    }
    Ok(Matrix::from_dense(dense))
}

fn verification(e: HopfError) -> LoadError {
    LoadError::Verification(e.to_string())
}

/// Evaluate an expression over Hopf basis labels, multiplying in `H`.
pub fn parse_hopf_element(
    h: &HopfData,
    s: &str,
    conductor: u32,
    path: &str,
) -> Result<SparseVec, LoadError> {
    let p = parse_poly(s, &h.labels).map_err(|e| schema(path, e.to_string()))?;
    let mut acc = SparseVec::new();
    for (w, c) in p.terms() {
        let mut t = h.unit.clone();
        for &x in w {
            t = h.mul(&t, &SparseVec::unit(x as usize));
        }
        acc.add_scaled(&lift(c, conductor, path)?, &t);
    }
    Ok(acc)
}

impl InputSpec {
    pub fn generator_names(&self) -> Vec<String> {
        self.algebra
            .generators
            .iter()
            .map(|g| g.name.clone())
            .collect()
    }

    /// Parse relations into a presentation with coefficients at the working conductor.
    pub fn presentation(&self) -> Result<Presentation, LoadError> {
        let n = self.field.conductor;
        if n == 0 {
            return Err(schema("field.conductor", "must be positive"));
        }
        let names = self.generator_names();
        let degrees: Vec<u32> = self.algebra.generators.iter().map(|g| g.degree).collect();
        let mut rels = Vec::new();
        for (k, r) in self.algebra.relations.iter().enumerate() {
            let path = format!("algebra.relations[{k}]");
            let p = parse_poly(r, &names).map_err(|e| schema(&path, e.to_string()))?;
            rels.push(lift_poly(&p, n, &path)?);
        }
        Presentation::new(names, degrees, rels).map_err(|e| schema("algebra", e.to_string()))
    }

    /// Effective truncation degree: explicit override, then the file, then the default.
    pub fn max_degree(&self, override_degree: Option<u32>) -> u32 {
        override_degree
            .or(self.options.max_degree)
            .unwrap_or(DEFAULT_MAX_DEGREE)
    }

    /// Build and verify every model.
    pub fn load(&self, override_degree: Option<u32>) -> Result<Problem, LoadError> {
        let n = self.field.conductor;
        let pres = self.presentation()?;
        let ng = pres.ngens();
        let d = self.max_degree(override_degree);
        let alg = GradedAlgebra::build(pres, d).map_err(|e| match e {
            AlgebraError::DegreeTooSmall { .. } => schema("options.max_degree", e.to_string()),
            _ => schema("algebra", e.to_string()),
        })?;

        let (hopf, kind, gen_matrices, supplied_chars, idem_specs, integral_spec) = match &self
            .action
        {
            ActionSpec::Group { generators } => {
                if generators.is_empty() {
                    return Err(schema(
                        "action.generators",
                        "at least one generator is required",
                    ));
                }
                let mut mats = Vec::new();
                for (k, g) in generators.iter().enumerate() {
                    mats.push((
                        g.name.clone(),
                        parse_matrix(&g.matrix, ng, n, &format!("action.generators[{k}].matrix"))?,
                    ));
                }
                let mg = generate_matrix_group(&mats, GROUP_CAP).map_err(verification)?;
                let h = HopfData::group_algebra(&mg.group);
                let chars = linear_characters(&mg);
                let gm = mg.matrices.clone();
                (h, ActionKind::Group(mg), gm, chars, Vec::new(), None)
            }
            ActionSpec::DualGroup {
                elements,
                table,
                degrees,
            } => {
                let idx: HashMap<&str, usize> = elements
                    .iter()
                    .enumerate()
                    .map(|(k, e)| (e.as_str(), k))
                    .collect();
                if idx.len() != elements.len() {
                    return Err(schema("action.elements", "duplicate element names"));
                }
                let mut t = Vec::new();
                if table.len() != elements.len() {
                    return Err(schema(
                        "action.table",
                        "table must have one row per element",
                    ));
                }
                for (a, row) in table.iter().enumerate() {
                    if row.len() != elements.len() {
                        return Err(schema(
                            format!("action.table[{a}]"),
                            "row has the wrong length",
                        ));
                    }
                    let mut r = Vec::new();
                    for (b, name) in row.iter().enumerate() {
                        r.push(*idx.get(name.as_str()).ok_or_else(|| {
                            schema(
                                format!("action.table[{a}][{b}]"),
                                format!("unknown element `{name}`"),
                            )
                        })?);
                    }
                    t.push(r);
                }
                let group = FiniteGroup::from_table(elements.clone(), t).map_err(verification)?;
                let names = self.generator_names();
                for k in degrees.keys() {
                    if !names.contains(k) {
                        return Err(schema(format!("action.degrees.{k}"), "unknown generator"));
                    }
                }
                let mut gdeg = Vec::new();
                for g in &names {
                    let e = degrees.get(g).ok_or_else(|| {
                        schema("action.degrees", format!("missing degree of `{g}`"))
                    })?;
                    gdeg.push(*idx.get(e.as_str()).ok_or_else(|| {
                        schema(
                            format!("action.degrees.{g}"),
                            format!("unknown element `{e}`"),
                        )
                    })?);
                }
                let h = HopfData::dual_group(&group);
                let gm = (0..group.order())
                    .map(|a| {
                        let rows = (0..ng)
                            .map(|i| {
                                if gdeg[i] == a {
                                    SparseVec::unit(i)
                                } else {
                                    SparseVec::new()
                                }
                            })
                            .collect();
                        Matrix::from_rows(ng, rows)
                    })
                    .collect();
                let chars = dual_group_characters(&group);
                (
                    h,
                    ActionKind::DualGroup {
                        group,
                        degrees: gdeg,
                    },
                    gm,
                    chars,
                    Vec::new(),
                    None,
                )
            }
            ActionSpec::Table(t) => {
                let (h, gm, chars) = self.load_table(t, ng)?;
                (
                    h,
                    ActionKind::Table,
                    gm,
                    chars,
                    t.idempotents.clone(),
                    t.integral.clone(),
                )
            }
        };
        let report = hopf.verify();
        if !report.passed() {
            let f = &report.failures()[0];
            return Err(LoadError::Verification(format!(
                "Hopf axiom `{}` fails at {}",
                f.axiom,
                f.witness.clone().unwrap_or_default()
            )));
        }
        let integral = hopf.integral().map_err(verification)?;
        if let Some(s) = &integral_spec {
            let given = parse_hopf_element(&hopf, s, n, "action.integral")?;
            if given != integral {
                return Err(LoadError::Verification(format!(
                    "supplied integral differs from the computed one {}",
                    hopf.format_elem(&integral)
                )));
            }
        }
        let chars = character_group(&hopf, &supplied_chars).map_err(verification)?;
        let action = ActionModel::new(alg, hopf, kind, gen_matrices).map_err(verification)?;
        let ma = action.check_module_algebra();
        if !ma.passed() {
            let f = &ma.failures()[0];
            return Err(LoadError::Verification(format!(
                "{} fails: {}",
                f.axiom,
                f.witness.clone().unwrap_or_default()
            )));
        }

        let mut idempotents = Vec::new();
        for (k, spec) in idem_specs.iter().enumerate() {
            let path = format!("action.idempotents[{k}]");
            let e = parse_hopf_element(&action.hopf, &spec.element, n, &path)?;
            let ch = match &spec.character {
                None => None,
                Some(c) => {
                    let gi = chars
                        .index_of(c)
                        .ok_or_else(|| schema(&path, format!("unknown character `{c}`")))?;
                    let derived =
                        character_idempotent(&action.hopf, &integral, &chars.chars[gi].values)
                            .map_err(verification)?;
                    if derived != e {
                        return Err(LoadError::Verification(format!(
                            "idempotent `{}` differs from p_{c} = {}",
                            spec.name,
                            action.hopf.format_elem(&derived)
                        )));
                    }
                    Some(gi)
                }
            };
            idempotents.push((spec.name.clone(), e, ch));
        }
        let plain: Vec<(String, SparseVec)> = idempotents
            .iter()
            .map(|(a, b, _)| (a.clone(), b.clone()))
            .collect();
        check_idempotents(&action.hopf, &plain).map_err(verification)?;
        for (name, e, _) in &idempotents {
            for c in &chars.chars {
                let v = action.hopf.eval(&c.values, e);
                if !(v.is_zero() || v.is_one()) {
                    return Err(LoadError::Verification(format!(
                        "character `{}` takes value {v} on `{name}`",
                        c.name
                    )));
                }
            }
        }

        let hdet =
            match &self.options.hdet {
                None => None,
                Some(name) => Some(chars.index_of(name).ok_or_else(|| {
                    schema("options.hdet", format!("unknown character `{name}`"))
                })?),
            };
        let names = action.alg.names().to_vec();
        let nakayama = match &self.options.nakayama {
            None => None,
            Some(map) => {
                for k in map.keys() {
                    if !names.contains(k) {
                        return Err(schema(format!("options.nakayama.{k}"), "unknown generator"));
                    }
                }
                let mut images = Vec::new();
                for g in &names {
                    let s = map.get(g).ok_or_else(|| {
                        schema("options.nakayama", format!("missing image of `{g}`"))
                    })?;
                    let path = format!("options.nakayama.{g}");
                    let p = parse_poly(s, &names).map_err(|e| schema(&path, e.to_string()))?;
                    images.push(lift_poly(&p, n, &path)?);
                }
                Some(images)
            }
        };
        let mut divisor_candidates = Vec::new();
        for (k, s) in self.options.divisor_candidates.iter().enumerate() {
            let path = format!("options.divisor_candidates[{k}]");
            let p = parse_poly(s, &names).map_err(|e| schema(&path, e.to_string()))?;
            let e = action
                .alg
                .reduce(&lift_poly(&p, n, &path)?)
                .map_err(|e| schema(&path, e.to_string()))?;
            divisor_candidates.push(e);
        }
        Ok(Problem {
            conductor: n,
            action,
            chars,
            integral,
            idempotents,
            hdet,
            nakayama,
            divisor_candidates,
            assertions: self.options.assertions.clone(),
        })
    }

    fn load_table(
        &self,
        t: &TableSpec,
        ng: usize,
    ) -> Result<(HopfData, Vec<Matrix>, Vec<Character>), LoadError> {
        let n = self.field.conductor;
        let dim = t.basis.len();
        let idx: HashMap<&str, usize> = t
            .basis
            .iter()
            .enumerate()
            .map(|(k, e)| (e.as_str(), k))
            .collect();
        if idx.len() != dim || dim == 0 {
            return Err(schema(
                "action.basis",
                "basis labels must be distinct and nonempty",
            ));
        }
        let label = |s: &str, path: &str| -> Result<usize, LoadError> {
            idx.get(s)
                .copied()
                .ok_or_else(|| schema(path, format!("unknown basis label `{s}`")))
        };
        let check_len = |v: &Vec<String>, k: usize, path: &str| -> Result<(), LoadError> {
            if v.len() != k {
                Err(schema(path, format!("expected {k} entries")))
            } else {
                Ok(())
            }
        };
        let mut unit = Vec::new();
        for (k, e) in t.unit.iter().enumerate() {
            let p = format!("action.unit[{k}]");
            check_len(e, 2, &p)?;
            unit.push((label(&e[0], &p)?, parse_scalar(&e[1], n, &p)?));
        }
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for (k, e) in t.mult.iter().enumerate() {
            let p = format!("action.mult[{k}]");
            check_len(e, 4, &p)?;
            let (a, b, c) = (label(&e[0], &p)?, label(&e[1], &p)?, label(&e[2], &p)?);
            mult[a][b].push((c, parse_scalar(&e[3], n, &p)?));
        }
        let mut comult = vec![Vec::new(); dim];
        for (k, e) in t.comult.iter().enumerate() {
            let p = format!("action.comult[{k}]");
            check_len(e, 4, &p)?;
            let (s, a, b) = (label(&e[0], &p)?, label(&e[1], &p)?, label(&e[2], &p)?);
            comult[s].push((a, b, parse_scalar(&e[3], n, &p)?));
        }
        let mut counit = vec![Scalar::zero().promote(n); dim];
        for (k, e) in t.counit.iter().enumerate() {
            let p = format!("action.counit[{k}]");
            check_len(e, 2, &p)?;
            counit[label(&e[0], &p)?] = parse_scalar(&e[1], n, &p)?;
        }
        let mut antipode = vec![Vec::new(); dim];
        for (k, e) in t.antipode.iter().enumerate() {
            let p = format!("action.antipode[{k}]");
            check_len(e, 3, &p)?;
            antipode[label(&e[0], &p)?].push((label(&e[1], &p)?, parse_scalar(&e[2], n, &p)?));
        }
        let h = HopfData {
            labels: t.basis.clone(),
            mult: mult
                .into_iter()
                .map(|r| r.into_iter().map(SparseVec::from_entries).collect())
                .collect(),
            unit: SparseVec::from_entries(unit),
            comult: comult
                .into_iter()
                .map(|terms: Vec<(usize, usize, Scalar)>| {
                    let v = SparseVec::from_entries(
                        terms
                            .into_iter()
                            .map(|(a, b, c)| (a * dim + b, c))
                            .collect(),
                    );
                    v.into_entries()
                        .into_iter()
                        .map(|(p, c)| (p / dim, p % dim, c))
                        .collect()
                })
                .collect(),
            counit,
            antipode: antipode.into_iter().map(SparseVec::from_entries).collect(),
        };
        for k in t.matrices.keys() {
            label(k, &format!("action.matrices.{k}"))?;
        }
        let mut gm = Vec::new();
        for b in &t.basis {
            let rows = t
                .matrices
                .get(b)
                .ok_or_else(|| schema("action.matrices", format!("missing matrix for `{b}`")))?;
            gm.push(parse_matrix(rows, ng, n, &format!("action.matrices.{b}"))?);
        }
        let mut chars = Vec::new();
        for (k, c) in t.characters.iter().enumerate() {
            let p = format!("action.characters[{k}]");
            for key in c.values.keys() {
                label(key, &format!("{p}.values.{key}"))?;
            }
            let mut values = Vec::new();
            for b in &t.basis {
                let v = c
                    .values
                    .get(b)
                    .ok_or_else(|| schema(&p, format!("missing value on `{b}`")))?;
                values.push(parse_scalar(v, n, &format!("{p}.values.{b}"))?);
            }
            chars.push(Character {
                name: c.name.clone(),
                values,
            });
        }
        Ok((h, gm, chars))
    }
}
