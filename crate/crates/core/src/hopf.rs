//! Finite-dimensional Hopf algebras by structure constants, their characters
//! and integrals, and actions on graded models extended through the coproduct.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::ncalg::{Elem, GradedAlgebra};
use crate::poly::{NCPoly, Word};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group closure exceeded {0} elements")]
    GroupTooLarge(usize),
    #[error("structure data: {0}")]
    Structure(String),
    #[error("no nonzero integral")]
    NoIntegral,
    #[error("integral has counit zero; the Hopf algebra is not semisimple")]
    NotSemisimple,
    #[error("integral is not idempotent")]
    IntegralNotIdempotent,
    #[error("`{name}` is not a character: {witness}")]
    NotCharacter { name: String, witness: String },
    #[error("character set not closed: {0}")]
    NotClosed(String),
    #[error("idempotent check failed: {0}")]
    Idempotent(String),
    #[error("action: {0}")]
    Action(String),
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, HopfError> {
        let n = names.len();
        if n == 0
            || table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(HopfError::InvalidGroup(
                "table must be square with entries in range".into(),
            ));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| HopfError::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| HopfError::InvalidGroup(format!("`{}` has no inverse", names[a])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(HopfError::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            names,
            table,
            identity,
            inverse,
        })
    }

    /// The trivial group with one element named `e`.
    pub fn trivial() -> Self {
        FiniteGroup {
            names: vec!["e".into()],
            table: vec![vec![0]],
            identity: 0,
            inverse: vec![0],
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether a nonempty subset is closed under products and inverses.
    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        !set.is_empty()
            && set.iter().all(|&a| {
                set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b)))
            })
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a))
    }
}

/// A finite matrix group with its elements named by shortest generator words.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub group: FiniteGroup,
    pub matrices: Vec<Matrix>,
    /// Indices of the generating matrices.
    pub generators: Vec<usize>,
    pub generator_names: Vec<String>,
}

/// Close a set of invertible matrices under multiplication (breadth first).
pub fn generate_matrix_group(
    gens: &[(String, Matrix)],
    cap: usize,
) -> Result<MatrixGroup, HopfError> {
    let dim = gens.first().map_or(0, |g| g.1.nrows());
    for (name, m) in gens {
        if m.nrows() != dim || m.ncols() != dim {
            return Err(HopfError::InvalidGroup(format!(
                "generator `{name}` has the wrong shape"
            )));
        }
    }
    let key = |m: &Matrix| m.to_string();
    let mut mats = vec![Matrix::identity(dim)];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<String, usize> = HashMap::from([(key(&mats[0]), 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for (gi, (_, g)) in gens.iter().enumerate() {
            let m = mats[a].mul(g);
            let k = key(&m);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                if mats.len() >= cap {
                    return Err(HopfError::GroupTooLarge(cap));
                }
                e.insert(mats.len());
                let mut w = words[a].clone();
                w.push(gi);
                words.push(w);
                mats.push(m);
                queue.push_back(mats.len() - 1);
            }
        }
    }
    let n = mats.len();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[a][b] = *index.get(&key(&mats[a].mul(&mats[b]))).ok_or_else(|| {
                HopfError::InvalidGroup("generators are not invertible of finite order".into())
            })?;
        }
    }
    let names = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "e".to_string()
            } else {
                w.iter()
                    .map(|&g| gens[g].0.as_str())
                    .collect::<Vec<_>>()
                    .join("*")
            }
        })
        .collect();
    let generators = gens.iter().map(|(_, g)| index[&key(g)]).collect();
    Ok(MatrixGroup {
        group: FiniteGroup::from_table(names, table)?,
        matrices: mats,
        generators,
        generator_names: gens.iter().map(|g| g.0.clone()).collect(),
    })
}

/// Structure constants of a finite-dimensional Hopf algebra on a labelled basis.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub labels: Vec<String>,
    /// `mult[i][j] = b_i b_j`.
    pub mult: Vec<Vec<SparseVec>>,
    pub unit: SparseVec,
    /// `comult[k]` lists `(i, j, c)` with `Δ(b_k) = Σ c b_i ⊗ b_j`.
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    /// `antipode[k] = S(b_k)`.
    pub antipode: Vec<SparseVec>,
}

/// Result of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl HopfData {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn group_algebra(g: &FiniteGroup) -> Self {
        let n = g.order();
        HopfData {
            labels: g.names.clone(),
            mult: (0..n)
                .map(|a| (0..n).map(|b| SparseVec::unit(g.mul(a, b))).collect())
                .collect(),
            unit: SparseVec::unit(g.identity),
            comult: (0..n).map(|a| vec![(a, a, Scalar::one())]).collect(),
            counit: vec![Scalar::one(); n],
            antipode: (0..n).map(|a| SparseVec::unit(g.inv(a))).collect(),
        }
    }

    /// The dual `(kG)*` on the basis of delta functions `p_g`.
    pub fn dual_group(g: &FiniteGroup) -> Self {
        let n = g.order();
        HopfData {
            labels: g.names.iter().map(|s| format!("p[{s}]")).collect(),
            mult: (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| {
                            if a == b {
                                SparseVec::unit(a)
                            } else {
                                SparseVec::new()
                            }
                        })
                        .collect()
                })
                .collect(),
            unit: SparseVec::from_entries((0..n).map(|a| (a, Scalar::one())).collect()),
            comult: (0..n)
                .map(|k| {
                    (0..n)
                        .map(|h| (h, g.mul(g.inv(h), k), Scalar::one()))
                        .collect()
                })
                .collect(),
            counit: (0..n)
                .map(|a| {
                    if a == g.identity {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect(),
            antipode: (0..n).map(|a| SparseVec::unit(g.inv(a))).collect(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis(&self, k: usize) -> SparseVec {
        SparseVec::unit(k)
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                acc.add_scaled(&(x * y), &self.mult[*i][*j]);
            }
        }
        acc
    }

    /// `Δ(a)` as a vector indexed by `i * n + j`.
    pub fn comult_vec(&self, a: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut raw = Vec::new();
        for (k, c) in a.entries() {
            for (i, j, v) in &self.comult[*k] {
                raw.push((i * n + j, c * v));
            }
        }
        SparseVec::from_entries(raw)
    }

    pub fn counit_of(&self, a: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in a.entries() {
            acc += &(c * &self.counit[*k]);
        }
        acc
    }

    pub fn antipode_of(&self, a: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (k, c) in a.entries() {
            acc.add_scaled(c, &self.antipode[*k]);
        }
        acc
    }

    fn tensor_mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut raw = Vec::new();
        for (p, a) in x.entries() {
            for (q, b) in y.entries() {
                let l = self.mult[p / n][q / n].entries();
                let r = self.mult[p % n][q % n].entries();
                for (i, ci) in l {
                    for (j, cj) in r {
                        raw.push((i * n + j, &(a * b) * &(ci * cj)));
                    }
                }
            }
        }
        SparseVec::from_entries(raw)
    }

    /// Check every axiom on basis elements, recording a witness on failure.
    pub fn verify(&self) -> HopfReport {
        let n = self.dim();
        let lab = |k: usize| self.labels[k].clone();
        let mut checks = Vec::new();
        let mut push = |axiom: &str, witness: Option<String>| {
            checks.push(AxiomCheck {
                axiom: axiom.to_string(),
                passed: witness.is_none(),
                witness,
            });
        };

        let shape_ok = self.mult.len() == n
            && self.mult.iter().all(|r| r.len() == n)
            && self.comult.len() == n
            && self.counit.len() == n
            && self.antipode.len() == n;
        if !shape_ok {
            push(
                "shape",
                Some("structure tensors have inconsistent sizes".into()),
            );
            return HopfReport { checks };
        }

        let mut w = None;
        'a: for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let l = self.mul(ij, &self.basis(k));
                    let r = self.mul(&self.basis(i), &self.mult[j][k]);
                    if l != r {
                        w = Some(format!("({}, {}, {})", lab(i), lab(j), lab(k)));
                        break 'a;
                    }
                }
            }
        }
        push("associativity", w);

        let w = (0..n)
            .find(|&k| {
                self.mul(&self.unit, &self.basis(k)) != self.basis(k)
                    || self.mul(&self.basis(k), &self.unit) != self.basis(k)
            })
            .map(lab);
        push("unit", w);

        let w = (0..n)
            .find(|&k| {
                let d = self.comult_vec(&self.basis(k));
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (p, c) in d.entries() {
                    let (i, j) = (p / n, p % n);
                    for (a, b, v) in &self.comult[i] {
                        left.push(((a * n + b) * n + j, c * v));
                    }
                    for (a, b, v) in &self.comult[j] {
                        right.push(((i * n + a) * n + b, c * v));
                    }
                }
                SparseVec::from_entries(left) != SparseVec::from_entries(right)
            })
            .map(lab);
        push("coassociativity", w);

        let w = (0..n)
            .find(|&k| {
                let mut l = SparseVec::new();
                let mut r = SparseVec::new();
                for (i, j, c) in &self.comult[k] {
                    l.add_scaled(&(c * &self.counit[*i]), &self.basis(*j));
                    r.add_scaled(&(c * &self.counit[*j]), &self.basis(*i));
                }
                l != self.basis(k) || r != self.basis(k)
            })
            .map(lab);
        push("counit", w);

        let mut w = None;
        'm: for i in 0..n {
            for j in 0..n {
                let l = self.comult_vec(&self.mult[i][j]);
                let r = self.tensor_mul(
                    &self.comult_vec(&self.basis(i)),
                    &self.comult_vec(&self.basis(j)),
                );
                if l != r {
                    w = Some(format!("({}, {})", lab(i), lab(j)));
                    break 'm;
                }
            }
        }
        let unit_ok = self.comult_vec(&self.unit) == self.tensor_unit();
        if w.is_none() && !unit_ok {
            w = Some("unit".into());
        }
        push("comultiplication is an algebra map", w);

        let mut w = None;
        'e: for i in 0..n {
            for j in 0..n {
                if self.counit_of(&self.mult[i][j]) != &self.counit[i] * &self.counit[j] {
                    w = Some(format!("({}, {})", lab(i), lab(j)));
                    break 'e;
                }
            }
        }
        if w.is_none() && !self.counit_of(&self.unit).is_one() {
            w = Some("unit".into());
        }
        push("counit is an algebra map", w);

        let w = (0..n)
            .find(|&k| {
                let mut l = SparseVec::new();
                let mut r = SparseVec::new();
                for (i, j, c) in &self.comult[k] {
                    l.add_scaled(c, &self.mul(&self.antipode[*i], &self.basis(*j)));
                    r.add_scaled(c, &self.mul(&self.basis(*i), &self.antipode[*j]));
                }
                let e = self.unit.scale(&self.counit[k]);
                l != e || r != e
            })
            .map(lab);
        push("antipode", w);

        HopfReport { checks }
    }

    fn tensor_unit(&self) -> SparseVec {
        let n = self.dim();
        let mut raw = Vec::new();
        for (i, a) in self.unit.entries() {
            for (j, b) in self.unit.entries() {
                raw.push((i * n + j, a * b));
            }
        }
        SparseVec::from_entries(raw)
    }

    /// Left multiplication by `a` as a matrix on `H`.
    pub fn left_mult_matrix(&self, a: &SparseVec) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim())
            .map(|k| self.mul(a, &self.basis(k)))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// The normalized integral: `h Λ = ε(h) Λ`, `ε(Λ) = 1`, `Λ² = Λ`.
    pub fn integral(&self) -> Result<SparseVec, HopfError> {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            let m = self
                .left_mult_matrix(&self.basis(i))
                .minus_scalar(&self.counit[i]);
            rows.extend(m.rows().iter().cloned());
        }
        let kernel = Matrix::from_rows(n, rows).kernel();
        let lam = kernel.rows().first().ok_or(HopfError::NoIntegral)?.clone();
        let e = self.counit_of(&lam);
        if e.is_zero() {
            return Err(HopfError::NotSemisimple);
        }
        let lam = lam.scale(&e.inv().unwrap());
        if self.mul(&lam, &lam) != lam {
            return Err(HopfError::IntegralNotIdempotent);
        }
        Ok(lam)
    }

    pub fn is_central(&self, a: &SparseVec) -> bool {
        (0..self.dim()).all(|k| self.mul(a, &self.basis(k)) == self.mul(&self.basis(k), a))
    }

    /// Evaluate a linear functional given by basis values.
    pub fn eval(&self, values: &[Scalar], a: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in a.entries() {
            acc += &(c * &values[*k]);
        }
        acc
    }

    /// `(f * g)(b_k) = Σ f(b_i) g(b_j)` over `Δ(b_k)`.
    pub fn convolve(&self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        self.comult
            .iter()
            .map(|terms| {
                let mut acc = Scalar::zero();
                for (i, j, c) in terms {
                    acc += &(&(c * &f[*i]) * &g[*j]);
                }
                acc
            })
            .collect()
    }

    /// `f ∘ S`.
    pub fn compose_antipode(&self, f: &[Scalar]) -> Vec<Scalar> {
        self.antipode.iter().map(|s| self.eval(f, s)).collect()
    }

    /// Check multiplicativity and unitality of a functional.
    pub fn check_character(&self, name: &str, values: &[Scalar]) -> Result<(), HopfError> {
        let n = self.dim();
        if values.len() != n {
            return Err(HopfError::NotCharacter {
                name: name.into(),
                witness: format!("expected {n} values"),
            });
        }
        if !self.eval(values, &self.unit).is_one() {
            return Err(HopfError::NotCharacter {
                name: name.into(),
                witness: "value at 1 is not 1".into(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if self.eval(values, &self.mult[i][j]) != &values[i] * &values[j] {
                    return Err(HopfError::NotCharacter {
                        name: name.into(),
                        witness: format!("({}, {})", self.labels[i], self.labels[j]),
                    });
                }
            }
        }
        Ok(())
    }

    /// Winding endomorphism: right `h ↦ Σ h₁ g(h₂)`, left `h ↦ Σ g(h₁) h₂`.
    pub fn winding(&self, g: &[Scalar], side: WindingSide) -> Result<Matrix, HopfError> {
        self.check_character("winding argument", g)?;
        let n = self.dim();
        let cols: Vec<SparseVec> = (0..n)
            .map(|k| {
                let mut acc = SparseVec::new();
                for (i, j, c) in &self.comult[k] {
                    match side {
                        WindingSide::Right => acc.add_scaled(&(c * &g[*j]), &self.basis(*i)),
                        WindingSide::Left => acc.add_scaled(&(c * &g[*i]), &self.basis(*j)),
                    }
                }
                acc
            })
            .collect();
        let m = Matrix::from_columns(n, &cols);
        for i in 0..n {
            for j in 0..n {
                let l = m.mul_vec(&self.mult[i][j]);
                let r = self.mul(&cols[i], &cols[j]);
                if l != r {
                    return Err(HopfError::Structure(format!(
                        "winding map is not multiplicative at ({}, {})",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        if m.rank() != n {
            return Err(HopfError::Structure("winding map is not invertible".into()));
        }
        Ok(m)
    }

    pub fn format_elem(&self, a: &SparseVec) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in a.entries().iter().enumerate() {
            out.push_str(&crate::poly::format_term(
                c,
                Some(self.labels[*i].clone()),
                k == 0,
            ));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindingSide {
    Left,
    Right,
}

/// A named character (grouplike element of the dual).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub values: Vec<Scalar>,
}

/// The group `G(K)` of characters under convolution.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub chars: Vec<Character>,
    pub group: FiniteGroup,
}

impl CharacterGroup {
    pub fn identity(&self) -> usize {
        self.group.identity
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.chars.iter().position(|c| c.name == name)
    }

    pub fn find(&self, values: &[Scalar]) -> Option<usize> {
        self.chars.iter().position(|c| c.values == values)
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn name(&self, g: usize) -> &str {
        &self.chars[g].name
    }
}

/// Verify the supplied characters and close them under convolution and inverse.
/// The counit is always included (named `eps` unless supplied under another name).
pub fn character_group(h: &HopfData, supplied: &[Character]) -> Result<CharacterGroup, HopfError> {
    let mut chars: Vec<Character> = Vec::new();
    for c in supplied {
        h.check_character(&c.name, &c.values)?;
        if !chars.iter().any(|d| d.values == c.values) {
            chars.push(c.clone());
        }
    }
    if !chars.iter().any(|c| c.values == h.counit) {
        chars.insert(
            0,
            Character {
                name: "eps".into(),
                values: h.counit.clone(),
            },
        );
    }
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = chars.clone();
        for a in &snapshot {
            let inv = h.compose_antipode(&a.values);
            if !chars.iter().any(|c| c.values == inv) {
                chars.push(Character {
                    name: format!("{}^-1", a.name),
                    values: inv,
                });
                changed = true;
            }
            for b in &snapshot {
                let p = h.convolve(&a.values, &b.values);
                if !chars.iter().any(|c| c.values == p) {
                    chars.push(Character {
                        name: format!("{}{}", a.name, b.name),
                        values: p,
                    });
                    changed = true;
                }
            }
            if chars.len() > 10_000 {
                return Err(HopfError::NotClosed(
                    "character closure exceeded 10000 elements".into(),
                ));
            }
        }
    }
    let n = chars.len();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let p = h.convolve(&chars[a].values, &chars[b].values);
            table[a][b] = chars.iter().position(|c| c.values == p).unwrap();
        }
    }
    let group = FiniteGroup::from_table(chars.iter().map(|c| c.name.clone()).collect(), table)?;
    for a in 0..n {
        let inv = h.compose_antipode(&chars[a].values);
        if chars[group.inv(a)].values != inv {
            return Err(HopfError::NotClosed(format!(
                "inverse of `{}` is not g∘S",
                chars[a].name
            )));
        }
    }
    Ok(CharacterGroup { chars, group })
}

/// Characters of `(kG)*`: evaluation at group elements, named by the elements.
pub fn dual_group_characters(g: &FiniteGroup) -> Vec<Character> {
    (0..g.order())
        .map(|a| Character {
            name: g.names[a].clone(),
            values: (0..g.order())
                .map(|b| {
                    if a == b {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect(),
        })
        .collect()
}

/// Linear characters of a matrix group, found by assigning roots of unity to
/// the generators and keeping the consistent assignments.
pub fn linear_characters(mg: &MatrixGroup) -> Vec<Character> {
    let g = &mg.group;
    let orders: Vec<usize> = mg.generators.iter().map(|&s| g.element_order(s)).collect();
    // Express every element as a word in generators (names already are such words).
    let words: Vec<Vec<usize>> = g
        .names
        .iter()
        .map(|n| {
            if n == "e" {
                Vec::new()
            } else {
                n.split('*')
                    .map(|p| mg.generator_names.iter().position(|q| q == p).unwrap())
                    .collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; orders.len()];
    loop {
        let vals: Vec<Scalar> = choice
            .iter()
            .zip(&orders)
            .map(|(&k, &o)| Scalar::root_of_unity(o as u32, k as i64))
            .collect();
        let values: Vec<Scalar> = words
            .iter()
            .map(|w| w.iter().fold(Scalar::one(), |acc, &s| &acc * &vals[s]))
            .collect();
        let consistent = (0..g.order())
            .all(|a| (0..g.order()).all(|b| values[g.mul(a, b)] == &values[a] * &values[b]));
        if consistent {
            let name = if values.iter().all(Scalar::is_one) {
                "eps".to_string()
            } else {
                let names: Vec<String> = choice
                    .iter()
                    .zip(&orders)
                    .map(|(&k, &o)| root_label(o, k))
                    .collect();
                format!("chi[{}]", names.join(","))
            };
            out.push(Character { name, values });
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < orders[k] {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// The central idempotent `p_g` with `h p_g = g(h) p_g`, obtained as `Ξ^r_{g⁻¹}(Λ)`.
pub fn character_idempotent(
    h: &HopfData,
    lambda: &SparseVec,
    g: &[Scalar],
) -> Result<SparseVec, HopfError> {
    let ginv = h.compose_antipode(g);
    let w = h.winding(&ginv, WindingSide::Right)?;
    Ok(w.mul_vec(lambda))
}

/// Verify supplied idempotents: central, idempotent, pairwise orthogonal.
pub fn check_idempotents(h: &HopfData, idems: &[(String, SparseVec)]) -> Result<(), HopfError> {
    for (name, e) in idems {
        if h.mul(e, e) != *e {
            return Err(HopfError::Idempotent(format!("`{name}` is not idempotent")));
        }
        if !h.is_central(e) {
            return Err(HopfError::Idempotent(format!("`{name}` is not central")));
        }
    }
    for (a, (na, ea)) in idems.iter().enumerate() {
        for (nb, eb) in &idems[a + 1..] {
            if !h.mul(ea, eb).is_zero() {
                return Err(HopfError::Idempotent(format!(
                    "`{na}` and `{nb}` are not orthogonal"
                )));
            }
        }
    }
    Ok(())
}

/// How the Hopf algebra was specified; determines the available shortcuts.
#[derive(Clone, Debug)]
pub enum ActionKind {
    /// `H = kG` for a matrix group acting linearly on the generators.
    Group(MatrixGroup),
    /// `H = (kG)*` acting through a `G`-grading; `degrees[x]` is the group degree of generator `x`.
    DualGroup {
        group: FiniteGroup,
        degrees: Vec<usize>,
    },
    /// Raw structure constants.
    Table,
}

/// An `H`-module-algebra structure on a graded model.
#[derive(Clone, Debug)]
pub struct ActionModel {
    pub alg: GradedAlgebra,
    pub hopf: HopfData,
    pub kind: ActionKind,
    /// `gen_matrices[k]`: action of `b_k` on generators, column convention `b_k · x_j = Σ_i M[i][j] x_i`.
    pub gen_matrices: Vec<Matrix>,
    /// `rho[d][k]`: action of `b_k` on `A_d`.
    rho: Vec<Vec<Matrix>>,
}

impl ActionModel {
    /// Build the per-degree action matrices; fails if generator matrices mix degrees.
    pub fn new(
        alg: GradedAlgebra,
        hopf: HopfData,
        kind: ActionKind,
        gen_matrices: Vec<Matrix>,
    ) -> Result<Self, HopfError> {
        let ng = alg.ngens();
        if gen_matrices.len() != hopf.dim() {
            return Err(HopfError::Action(format!(
                "expected {} generator matrices, found {}",
                hopf.dim(),
                gen_matrices.len()
            )));
        }
        for (k, m) in gen_matrices.iter().enumerate() {
            if m.nrows() != ng || m.ncols() != ng {
                return Err(HopfError::Action(format!(
                    "matrix of `{}` must be {ng}x{ng}",
                    hopf.labels[k]
                )));
            }
            for j in 0..ng {
                for (i, _) in m.column(j).into_entries() {
                    if alg.degrees()[i] != alg.degrees()[j] {
                        return Err(HopfError::Action(format!(
                            "`{}` maps `{}` outside its degree",
                            hopf.labels[k],
                            alg.names()[j]
                        )));
                    }
                }
            }
        }
        let mut model = ActionModel {
            alg,
            hopf,
            kind,
            gen_matrices,
            rho: Vec::new(),
        };
        model.build_rho();
        Ok(model)
    }

    fn build_rho(&mut self) {
        let n = self.hopf.dim();
        let alg = &self.alg;
        let mut rho: Vec<Vec<Matrix>> = vec![(0..n)
            .map(|k| Matrix::from_dense(vec![vec![self.hopf.counit[k].clone()]]))
            .collect()];
        // Action of b_k on a generator, as a list (generator index, coefficient).
        let gen_images: Vec<Vec<Vec<(usize, Scalar)>>> = self
            .gen_matrices
            .iter()
            .map(|m| {
                let cols = m.columns();
                cols.into_iter().map(|c| c.into_entries()).collect()
            })
            .collect();
        for d in 1..=alg.max_degree() {
            let dim = alg.dim(d);
            let mut cols: Vec<Vec<SparseVec>> = vec![Vec::with_capacity(dim); n];
            for w in 0..dim {
                let word = &alg.basis(d)[w];
                let (&x, head) = word.split_last().unwrap();
                let pd = d - alg.degrees()[x as usize];
                let bp = alg.word_index(head).unwrap();
                // (b_a · w') for every a, computed once.
                let prefix_images: Vec<Elem> = (0..n)
                    .map(|a| Elem::new(pd, rho[pd as usize][a].column(bp)))
                    .collect();
                let mut cache: HashMap<(usize, usize), SparseVec> = HashMap::new();
                for (k, col) in cols.iter_mut().enumerate() {
                    let mut acc = SparseVec::new();
                    for (a, b, c) in &self.hopf.comult[k] {
                        if prefix_images[*a].is_zero() {
                            continue;
                        }
                        for (xi, m) in &gen_images[*b][x as usize] {
                            let v = cache.entry((*a, *xi)).or_insert_with(|| {
                                alg.times_letter(&prefix_images[*a], *xi as u8).unwrap().vec
                            });
                            acc.add_scaled(&(c * m), v);
                        }
                    }
                    col.push(acc);
                }
            }
            rho.push(cols.iter().map(|c| Matrix::from_columns(dim, c)).collect());
        }
        self.rho = rho;
    }

    pub fn matrix(&self, d: u32, k: usize) -> &Matrix {
        &self.rho[d as usize][k]
    }

    /// Action of an arbitrary element of `H` on `A_d`.
    pub fn matrix_of(&self, d: u32, h: &SparseVec) -> Matrix {
        let dim = self.alg.dim(d);
        let mut m = Matrix::zero(dim, dim);
        for (k, c) in h.entries() {
            m = m.add(&self.rho[d as usize][*k].scale(c));
        }
        m
    }

    /// `h · p`.
    pub fn act(&self, h: &SparseVec, p: &Elem) -> Elem {
        let mut acc = SparseVec::new();
        for (k, c) in h.entries() {
            acc.add_scaled(c, &self.rho[p.deg as usize][*k].mul_vec(&p.vec));
        }
        Elem::new(p.deg, acc)
    }

    pub fn act_basis(&self, k: usize, p: &Elem) -> Elem {
        Elem::new(p.deg, self.rho[p.deg as usize][k].mul_vec(&p.vec))
    }

    /// Action of `b_k` on a free word through the iterated coproduct.
    pub fn act_free_word(
        &self,
        k: usize,
        w: &[u8],
        memo: &mut HashMap<(usize, Word), NCPoly>,
    ) -> NCPoly {
        if w.is_empty() {
            return NCPoly::constant(self.hopf.counit[k].clone());
        }
        if let Some(p) = memo.get(&(k, w.to_vec())) {
            return p.clone();
        }
        let (&x, head) = w.split_last().unwrap();
        let mut acc = NCPoly::zero();
        for (a, b, c) in &self.hopf.comult[k] {
            let left = self.act_free_word(*a, head, memo);
            if left.is_zero() {
                continue;
            }
            let col = self.gen_matrices[*b].column(x as usize);
            for (xi, m) in col.entries() {
                let right = NCPoly::monomial(vec![*xi as u8], c * m);
                acc = acc.add(&left.mul(&right));
            }
        }
        memo.insert((k, w.to_vec()), acc.clone());
        acc
    }

    pub fn act_free(
        &self,
        k: usize,
        p: &NCPoly,
        memo: &mut HashMap<(usize, Word), NCPoly>,
    ) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (w, c) in p.terms() {
            acc = acc.add(&self.act_free_word(k, w, memo).scale(c));
        }
        acc
    }

    /// Module axioms on generators and stability of the relation ideal.
    pub fn check_module_algebra(&self) -> HopfReport {
        let n = self.hopf.dim();
        let ng = self.alg.ngens();
        let mut checks = Vec::new();
        let mut w = None;
        'm: for i in 0..n {
            for j in 0..n {
                let mut rhs = Matrix::zero(ng, ng);
                for (k, c) in self.hopf.mult[i][j].entries() {
                    rhs = rhs.add(&self.gen_matrices[*k].scale(c));
                }
                if self.gen_matrices[i].mul(&self.gen_matrices[j]) != rhs {
                    w = Some(format!(
                        "({}, {})",
                        self.hopf.labels[i], self.hopf.labels[j]
                    ));
                    break 'm;
                }
            }
        }
        let mut unit = Matrix::zero(ng, ng);
        for (k, c) in self.hopf.unit.entries() {
            unit = unit.add(&self.gen_matrices[*k].scale(c));
        }
        if w.is_none() && unit != Matrix::identity(ng) {
            w = Some("unit does not act as the identity".into());
        }
        checks.push(AxiomCheck {
            axiom: "module axioms on generators".into(),
            passed: w.is_none(),
            witness: w,
        });

        let mut memo = HashMap::new();
        let mut w = None;
        'r: for (ri, r) in self.alg.presentation().relations.iter().enumerate() {
            for k in 0..n {
                let image = self.act_free(k, r, &mut memo);
                match self.alg.reduce(&image) {
                    Ok(e) if e.is_zero() => {}
                    _ => {
                        w = Some(format!("relation {} under `{}`", ri, self.hopf.labels[k]));
                        break 'r;
                    }
                }
            }
        }
        checks.push(AxiomCheck {
            axiom: "relation ideal is stable".into(),
            passed: w.is_none(),
            witness: w,
        });
        HopfReport { checks }
    }

    pub fn max_degree(&self) -> u32 {
        self.alg.max_degree()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Intersection of kernels of `M_k - g(b_k) I` over all basis elements: the `g`-eigenspace of `A_d`.
pub fn eigenspace(action: &ActionModel, d: u32, g: &[Scalar]) -> Subspace {
    let dim = action.alg.dim(d);
    let mut rows = Vec::new();
    for k in 0..action.hopf.dim() {
        let m = action.matrix(d, k).minus_scalar(&g[k]);
        rows.extend(m.rows().iter().filter(|r| !r.is_zero()).cloned());
    }
    Matrix::from_rows(dim, rows).kernel()
}

/// `zeta_o^k` written as `1`, `-1`, `i`, `-i` or `zN^k` with `k/N` reduced.
fn root_label(o: usize, k: usize) -> String {
    let g = num_integer::gcd(o, k).max(1);
    let (n, k) = (o / g, k / g);
    match (n, k) {
        (1, _) => "1".into(),
        (2, _) => "-1".into(),
        (4, 1) => "i".into(),
        (4, 3) => "-i".into(),
        (_, 1) => format!("z{n}"),
        _ => format!("z{n}^{k}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let names = (0..n).map(|k| format!("g{k}")).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_table(names, table).unwrap()
    }

    #[test]
    fn group_algebra_c2() {
        let h = HopfData::group_algebra(&cyclic(2));
        assert!(h.verify().passed());
        let lam = h.integral().unwrap();
        assert_eq!(
            lam,
            SparseVec::from_dense(&[Scalar::from_ratio(1, 2), Scalar::from_ratio(1, 2)])
        );
        assert!(h.is_central(&lam));
    }

    #[test]
    fn dual_group_integral() {
        let g = cyclic(3);
        let h = HopfData::dual_group(&g);
        assert!(h.verify().passed());
        assert_eq!(h.integral().unwrap(), SparseVec::unit(g.identity));
        let cg = character_group(&h, &dual_group_characters(&g)).unwrap();
        assert_eq!(cg.len(), 3);
        // χ_a * χ_b = χ_{ab}
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(cg.group.mul(a, b), (a + b) % 3);
            }
        }
    }

    #[test]
    fn trivial_character_group() {
        let h = HopfData::group_algebra(&FiniteGroup::trivial());
        let cg = character_group(&h, &[]).unwrap();
        assert_eq!(cg.len(), 1);
        assert_eq!(cg.name(0), "eps");
    }

    #[test]
    fn winding_identity_and_translation() {
        let g = cyclic(4);
        let h = HopfData::dual_group(&g);
        let eps = h.counit.clone();
        assert_eq!(
            h.winding(&eps, WindingSide::Right).unwrap(),
            Matrix::identity(4)
        );
        let chars = dual_group_characters(&g);
        let w = h.winding(&chars[1].values, WindingSide::Right).unwrap();
        // Ξ^r_g(p_k) = p_{k g^{-1}}
        for k in 0..4 {
            assert_eq!(w.mul_vec(&SparseVec::unit(k)), SparseVec::unit((k + 3) % 4));
        }
        let bad = vec![Scalar::from_int(2); 4];
        assert!(h.winding(&bad, WindingSide::Left).is_err());
    }

    #[test]
    fn matrix_group_closure() {
        let z = Scalar::root_of_unity(3, 1);
        let s = Matrix::from_dense(vec![
            vec![Scalar::from_int(-1), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one()],
        ]);
        let t = Matrix::from_dense(vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), z],
        ]);
        let mg = generate_matrix_group(&[("s".into(), s), ("t".into(), t)], 100).unwrap();
        assert_eq!(mg.group.order(), 6);
        assert!(mg.group.is_abelian());
        let chars = linear_characters(&mg);
        assert_eq!(chars.len(), 6);
        let h = HopfData::group_algebra(&mg.group);
        assert!(character_group(&h, &chars).is_ok());
        assert!(generate_matrix_group(
            &[(
                "s".into(),
                Matrix::from_dense(vec![vec![Scalar::from_int(2)]])
            )],
            50
        )
        .is_err());
    }

    #[test]
    fn bad_group_tables() {
        assert!(FiniteGroup::from_table(
            vec!["a".into(), "b".into()],
            vec![vec![0, 0], vec![0, 0]]
        )
        .is_err());
    }
}
