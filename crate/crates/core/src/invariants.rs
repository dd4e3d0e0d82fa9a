//! Components `A_g`, the fixed ring, homological determinant, Jacobian,
//! reflection arrangement, discriminants and the identities relating them.

use std::collections::HashMap;

use thiserror::Error;

use crate::cpoly::CPoly;
use crate::hopf::{ActionKind, ActionModel, CharacterGroup, WindingSide};
use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::ncalg::{AlgebraError, Elem, GradedAlgebra, GradedSubspace, Side};
use crate::poly::{NCPoly, Word};
use crate::scalars::Scalar;
use crate::series::{self, Series};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    /// A hypothesis of the theory fails on this input.
    #[error("hypothesis failure: {0}")]
    Hypothesis(String),
    /// Two independent computations disagree.
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Indices of Hopf basis elements whose eigenvalues determine a character on this action.
fn acting_indices(action: &ActionModel) -> Vec<usize> {
    match &action.kind {
        ActionKind::Group(mg) => {
            let mut v = mg.generators.clone();
            v.sort_unstable();
            v.dedup();
            v
        }
        _ => (0..action.hopf.dim()).collect(),
    }
}

/// `{a : h·a = g(h) a for all h}` in every degree.
pub fn component_slices(action: &ActionModel, g: &[Scalar]) -> GradedSubspace {
    let idx = acting_indices(action);
    let slices = (0..=action.max_degree())
        .map(|d| {
            let dim = action.alg.dim(d);
            let mut rows = Vec::new();
            for &k in &idx {
                let m = action.matrix(d, k).minus_scalar(&g[k]);
                rows.extend(m.rows().iter().filter(|r| !r.is_zero()).cloned());
            }
            Matrix::from_rows(dim, rows).kernel()
        })
        .collect();
    GradedSubspace { slices }
}

/// The component `A_g` of one character.
#[derive(Clone, Debug)]
pub struct Component {
    pub character: usize,
    pub slices: GradedSubspace,
    /// `f_g`: the lowest-degree element, leading coefficient 1 (when that slice is a line).
    pub generator: Option<Elem>,
    /// Dimension of the lowest nonzero slice.
    pub lowest_dim: usize,
    /// First degree where `f_g R` (`Side::Right`) or `R f_g` (`Side::Left`) misses the slice.
    pub freeness_gap: Option<(u32, Side)>,
}

impl Component {
    pub fn is_zero(&self) -> bool {
        self.slices.lowest_degree().is_none()
    }

    pub fn degree(&self) -> Option<u32> {
        self.slices.lowest_degree()
    }
}

#[derive(Clone, Debug)]
pub struct ComponentTable {
    pub components: Vec<Component>,
    pub identity: usize,
}

impl ComponentTable {
    /// Characters with a nonzero component.
    pub fn g0(&self) -> Vec<usize> {
        self.components
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.character)
            .collect()
    }

    pub fn fixed(&self) -> &GradedSubspace {
        &self.components[self.identity].slices
    }

    pub fn f(&self, g: usize) -> Option<&Elem> {
        self.components[g].generator.as_ref()
    }

    /// Every nonzero component has a one-dimensional lowest slice and passes the freeness comparison.
    pub fn rank_one(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.is_zero() || (c.lowest_dim == 1 && c.freeness_gap.is_none()))
    }

    /// `G₀` is closed under products and inverses.
    pub fn g0_is_subgroup(&self, chars: &CharacterGroup) -> bool {
        let g0 = self.g0();
        chars.group.is_subgroup(&g0)
    }

    /// `Σ_g A_g` slice dimensions.
    pub fn sum_dims(&self) -> Vec<usize> {
        let n = self.components[0].slices.slices.len();
        (0..n)
            .map(|d| {
                self.components
                    .iter()
                    .map(|c| c.slices.slices[d].dim())
                    .sum()
            })
            .collect()
    }
}

fn span_products(alg: &GradedAlgebra, left: &[Elem], right: &[Elem], d: u32) -> Subspace {
    let mut s = Subspace::new(alg.dim(d));
    for a in left {
        for b in right {
            s.insert(alg.mul(a, b).expect("degree within bounds").vec);
        }
    }
    s
}

/// Per-character components with generators and freeness evidence.
pub fn components(action: &ActionModel, chars: &CharacterGroup) -> ComponentTable {
    let alg = &action.alg;
    let dmax = action.max_degree();
    let mut comps: Vec<Component> = chars
        .chars
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let slices = component_slices(action, &c.values);
            let (generator, lowest_dim) = match slices.lowest_degree() {
                None => (None, 0),
                Some(d) => {
                    let s = slices.slice(d);
                    let g = if s.dim() == 1 {
                        Some(Elem::new(d, s.rows()[0].clone()).normalized())
                    } else {
                        None
                    };
                    (g, s.dim())
                }
            };
            Component {
                character: k,
                slices,
                generator,
                lowest_dim,
                freeness_gap: None,
            }
        })
        .collect();
    let identity = chars.identity();
    let r = comps[identity].slices.clone();
    for c in comps.iter_mut() {
        let Some(f) = c.generator.clone() else {
            continue;
        };
        for d in f.deg..=dmax {
            let rs = r.elems(d - f.deg);
            let target = c.slices.slice(d);
            if &span_products(alg, std::slice::from_ref(&f), &rs, d) != target {
                c.freeness_gap = Some((d, Side::Right));
                break;
            }
            if &span_products(alg, &rs, std::slice::from_ref(&f), d) != target {
                c.freeness_gap = Some((d, Side::Left));
                break;
            }
        }
    }
    ComponentTable {
        components: comps,
        identity,
    }
}

/// The fixed ring `R = A^H` with its minimal generators.
#[derive(Clone, Debug)]
pub struct FixedRing {
    pub slices: GradedSubspace,
    /// Minimal generators in increasing degree, each with leading coefficient 1.
    pub generators: Vec<Elem>,
    /// The slices equal the image of the integral's action.
    pub integral_image_agrees: bool,
    /// `h_R(t) ∏(1 - t^{d_i}) ≡ 1` up to the truncation degree.
    pub polynomial_certificate: bool,
    /// The generators commute pairwise (checked where degrees allow).
    pub commutative: bool,
}

impl FixedRing {
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.deg).collect()
    }

    pub fn hilbert(&self) -> Series {
        series::from_dims(&self.slices.dims())
    }

    /// Names `t1, t2, …` of the generators.
    pub fn generator_names(&self) -> Vec<String> {
        (1..=self.generators.len())
            .map(|k| format!("t{k}"))
            .collect()
    }

    /// Exponent vectors of weighted degree `d`.
    fn exponents(&self, d: u32) -> Vec<Vec<u32>> {
        fn rec(degs: &[u32], k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if k == degs.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut e = 0;
            while e * degs[k] <= left {
                cur.push(e);
                rec(degs, k + 1, left - e * degs[k], cur, out);
                cur.pop();
                e += 1;
            }
        }
        let mut out = Vec::new();
        rec(&self.generator_degrees(), 0, d, &mut Vec::new(), &mut out);
        out
    }

    /// `t^e` evaluated in `A` as the ordered product `t1^{e1} t2^{e2} …`.
    pub fn monomial(&self, alg: &GradedAlgebra, e: &[u32]) -> Result<Elem, AlgebraError> {
        let mut acc = Elem::one();
        for (k, &p) in e.iter().enumerate() {
            for _ in 0..p {
                acc = alg.mul(&acc, &self.generators[k])?;
            }
        }
        Ok(acc)
    }

    /// Evaluate a commutative polynomial in the generators.
    pub fn evaluate(&self, alg: &GradedAlgebra, p: &CPoly) -> Result<Option<Elem>, AlgebraError> {
        let mut acc: Option<Elem> = None;
        for (e, c) in p.terms() {
            let m = self.monomial(alg, e)?.scale(c);
            acc = Some(match acc {
                None => m,
                Some(a) if a.deg == m.deg => a.add(&m),
                Some(_) => return Ok(None),
            });
        }
        Ok(acc)
    }

    /// Express an element of `R` as a polynomial in the generators, when the
    /// ordered monomials of its degree form a basis of the slice.
    pub fn to_cpoly(&self, alg: &GradedAlgebra, e: &Elem) -> Option<CPoly> {
        let exps = self.exponents(e.deg);
        let mut cols = Vec::with_capacity(exps.len());
        for x in &exps {
            cols.push(self.monomial(alg, x).ok()?.vec);
        }
        if Subspace::spanned_by(alg.dim(e.deg), cols.iter().cloned()).dim() != cols.len() {
            return None;
        }
        let sol = crate::linalg::solve_columns(alg.dim(e.deg), &cols, &e.vec)?;
        let mut p = CPoly::zero(self.generators.len());
        for (k, c) in sol.entries() {
            p.add_term(exps[*k].clone(), c.clone());
        }
        Some(p)
    }
}

/// Fixed ring with generator detection and the polynomial-type certificate.
pub fn fixed_ring(action: &ActionModel, integral: &SparseVec, table: &ComponentTable) -> FixedRing {
    let alg = &action.alg;
    let dmax = action.max_degree();
    let slices = table.fixed().clone();
    let integral_image_agrees =
        (0..=dmax).all(|d| action.matrix_of(d, integral).image() == *slices.slice(d));
    let mut generators: Vec<Elem> = Vec::new();
    for d in 1..=dmax {
        let mut dec = Subspace::new(alg.dim(d));
        for g in generators.iter().filter(|g| g.deg < d) {
            for r in slices.elems(d - g.deg) {
                dec.insert(alg.mul(g, &r).unwrap().vec);
            }
        }
        // Sparse rows first, smallest leading word first, so that monomial generators are preferred.
        let mut rows: Vec<&SparseVec> = slices.slice(d).rows().iter().rev().collect();
        rows.sort_by_key(|r| r.nnz());
        for row in rows {
            if dec.insert(row.clone()) {
                generators.push(Elem::new(d, row.clone()).normalized());
            }
        }
    }
    let degs: Vec<u32> = generators.iter().map(|g| g.deg).collect();
    let len = dmax as usize + 1;
    let prod = series::mul(
        &series::from_dims(&slices.dims()),
        &series::one_minus_powers(&degs, len),
    );
    let polynomial_certificate = prod
        .iter()
        .enumerate()
        .all(|(k, &c)| c == i64::from(k == 0));
    let mut commutative = true;
    for (i, a) in generators.iter().enumerate() {
        for b in &generators[i + 1..] {
            if a.deg + b.deg <= dmax && alg.mul(a, b).unwrap() != alg.mul(b, a).unwrap() {
                commutative = false;
            }
        }
    }
    FixedRing {
        slices,
        generators,
        integral_image_agrees,
        polynomial_certificate,
        commutative,
    }
}

/// How a homological determinant was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HdetMethod {
    /// Character on the one-dimensional top of the Koszul intersections.
    Koszul,
    /// The component whose generator degree equals `deg ξ(t)`.
    Hilbert,
    /// Named in the input.
    Supplied,
}

impl HdetMethod {
    pub fn name(self) -> &'static str {
        match self {
            HdetMethod::Koszul => "koszul",
            HdetMethod::Hilbert => "hilbert",
            HdetMethod::Supplied => "supplied",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HdetOutcome {
    pub method: HdetMethod,
    /// The character `hdet` found by this method.
    pub result: Option<usize>,
    pub note: String,
}

/// The one-dimensional top `W_ℓ` of the Koszul intersections.
#[derive(Clone, Debug)]
pub struct KoszulTop {
    pub degree: u32,
    pub element: NCPoly,
    /// `h · w = values[h] w` for every Hopf basis element.
    pub values: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct HdetResult {
    pub hdet: usize,
    pub inverse: usize,
    pub top: Option<KoszulTop>,
    /// `ξ(t) = h_A(t) / h_R(t)` up to the truncation degree.
    pub xi: Series,
    pub outcomes: Vec<HdetOutcome>,
}

impl HdetResult {
    /// `ℓ_A`, the degree of the Koszul top.
    pub fn koszul_degree(&self) -> Option<u32> {
        self.top.as_ref().map(|t| t.degree)
    }
}

fn word_index(w: &[u8], n: usize) -> usize {
    w.iter().fold(0, |acc, &x| acc * n + x as usize)
}

fn index_word(mut k: usize, len: usize, n: usize) -> Word {
    let mut w = vec![0u8; len];
    for slot in w.iter_mut().rev() {
        *slot = (k % n) as u8;
        k /= n;
    }
    w
}

/// Largest free slice the Koszul search will build.
const KOSZUL_CAP: usize = 200_000;

/// Search `W_s = ⋂ V^{⊗i} ⊗ Rel ⊗ V^{⊗(s-N-i)}` for the one-dimensional top and the
/// scalar by which every Hopf basis element acts on it. `Ok(None)` when the
/// method does not apply (mixed degrees, unequal relation degrees, no top below `D`).
pub fn koszul_top(action: &ActionModel) -> Result<Option<KoszulTop>, InvariantError> {
    let alg = &action.alg;
    let pres = alg.presentation();
    let n = alg.ngens();
    if alg.degrees().iter().any(|&d| d != 1) || pres.relations.is_empty() {
        return Ok(None);
    }
    let big_n = pres.relation_degree(0);
    if (0..pres.relations.len()).any(|k| pres.relation_degree(k) != big_n) {
        return Ok(None);
    }
    let to_vec = |p: &NCPoly| {
        SparseVec::from_entries(
            p.terms()
                .map(|(w, c)| (word_index(w, n), c.clone()))
                .collect(),
        )
    };
    let mut s = big_n as usize;
    let mut w = Subspace::spanned_by(n.pow(s as u32), pres.relations.iter().map(to_vec));
    loop {
        if w.is_zero() || s as u32 > action.max_degree() {
            return Ok(None);
        }
        let amb = n.pow(s as u32 + 1);
        if amb > KOSZUL_CAP {
            return Ok(None);
        }
        let right = Subspace::spanned_by(
            amb,
            w.rows()
                .iter()
                .flat_map(|r| (0..n).map(move |x| r.map_indices(|k| k * n + x))),
        );
        let left = Subspace::spanned_by(
            amb,
            w.rows()
                .iter()
                .flat_map(|r| (0..n).map(move |x| r.map_indices(|k| x * n.pow(s as u32) + k))),
        );
        let next = right.intersect(&left).expect("same ambient");
        if w.dim() == 1 && next.is_zero() {
            let v = &w.rows()[0];
            let elem = NCPoly::from_terms(
                v.entries()
                    .iter()
                    .map(|(k, c)| (index_word(*k, s, n), c.clone())),
            );
            let mut memo = HashMap::new();
            let mut values = Vec::new();
            for k in 0..action.hopf.dim() {
                let img = to_vec(&action.act_free(k, &elem, &mut memo));
                if img.is_zero() {
                    values.push(Scalar::zero());
                } else {
                    let r = v.ratio_to(&img).ok_or_else(|| {
                        InvariantError::Hypothesis(format!(
                            "`{}` does not act by a scalar on the Koszul top",
                            action.hopf.labels[k]
                        ))
                    })?;
                    values.push(r);
                }
            }
            return Ok(Some(KoszulTop {
                degree: s as u32,
                element: elem,
                values,
            }));
        }
        w = next;
        s += 1;
    }
}

/// `ξ(t) = h_A(t)/h_R(t)`.
pub fn xi_series(alg: &GradedAlgebra, r: &FixedRing) -> Series {
    series::div(&series::from_dims(&alg.hilbert()), &r.hilbert())
}

/// Degree of `ξ` when it is visibly a polynomial below the truncation degree.
fn xi_degree(xi: &[i64]) -> Option<usize> {
    let d = series::degree(xi)?;
    (d + 1 < xi.len()).then_some(d)
}

/// Homological determinant by every applicable method; disagreements are errors.
pub fn hdet(
    action: &ActionModel,
    chars: &CharacterGroup,
    table: &ComponentTable,
    r: &FixedRing,
    supplied: Option<usize>,
) -> Result<HdetResult, InvariantError> {
    let mut outcomes = Vec::new();
    let top = koszul_top(action)?;
    match &top {
        Some(t) => {
            let found = chars.find(&t.values);
            let note = match found {
                Some(_) => format!("top in degree {}", t.degree),
                None => format!(
                    "top in degree {} carries a character outside G(K)",
                    t.degree
                ),
            };
            if found.is_none() {
                return Err(InvariantError::Hypothesis(note));
            }
            outcomes.push(HdetOutcome {
                method: HdetMethod::Koszul,
                result: found,
                note,
            });
        }
        None => outcomes.push(HdetOutcome {
            method: HdetMethod::Koszul,
            result: None,
            note: "not applicable".into(),
        }),
    }
    let xi = xi_series(&action.alg, r);
    let hilbert = match xi_degree(&xi) {
        None => HdetOutcome {
            method: HdetMethod::Hilbert,
            result: None,
            note: "ξ(t) not visibly polynomial".into(),
        },
        Some(deg) => {
            let cands: Vec<usize> = table
                .g0()
                .into_iter()
                .filter(|&g| table.components[g].degree() == Some(deg as u32))
                .collect();
            match cands.as_slice() {
                [g] => HdetOutcome {
                    method: HdetMethod::Hilbert,
                    result: Some(chars.group.inv(*g)),
                    note: format!("deg ξ = {deg}"),
                },
                [] => HdetOutcome {
                    method: HdetMethod::Hilbert,
                    result: None,
                    note: format!("no component generated in degree {deg}"),
                },
                _ => HdetOutcome {
                    method: HdetMethod::Hilbert,
                    result: None,
                    note: format!("{} components generated in degree {deg}", cands.len()),
                },
            }
        }
    };
    outcomes.push(hilbert);
    if let Some(g) = supplied {
        outcomes.push(HdetOutcome {
            method: HdetMethod::Supplied,
            result: Some(g),
            note: String::new(),
        });
    }
    let found: Vec<(HdetMethod, usize)> = outcomes
        .iter()
        .filter_map(|o| o.result.map(|g| (o.method, g)))
        .collect();
    let Some(&(_, h)) = found
        .iter()
        .find(|(m, _)| *m == HdetMethod::Supplied)
        .or(found.first())
    else {
        return Err(InvariantError::Precondition(
            "no method determines hdet; supply options.hdet".into(),
        ));
    };
    for (m, g) in &found {
        if *g != h {
            return Err(InvariantError::Inconsistent(format!(
                "hdet methods disagree: {} gives `{}`, another gives `{}`",
                m.name(),
                chars.name(*g),
                chars.name(h)
            )));
        }
    }
    Ok(HdetResult {
        hdet: h,
        inverse: chars.group.inv(h),
        top,
        xi,
        outcomes,
    })
}

/// Jacobian, arrangement and discriminants.
#[derive(Clone, Debug)]
pub struct Jacobian {
    pub j: Elem,
    pub a: Elem,
    /// `a · j`, when within the truncation degree.
    pub delta_left: Option<Elem>,
    /// `j · a`.
    pub delta_right: Option<Elem>,
    pub deltas_proportional: Option<bool>,
    pub deltas_in_r: Option<bool>,
    /// `j ∈ a·A`.
    pub a_left_divides_j: bool,
    /// `j ∈ A·a`.
    pub a_right_divides_j: bool,
}

impl Jacobian {
    pub fn j_equals_a(&self) -> bool {
        self.j.proportional(&self.a)
    }
}

/// Whether `target ∈ f · A` (`Side::Right`) or `target ∈ A · f` (`Side::Left`).
pub fn divides(alg: &GradedAlgebra, f: &Elem, target: &Elem, side: Side) -> bool {
    if f.deg > target.deg {
        return false;
    }
    let d = target.deg - f.deg;
    let m = match side {
        Side::Left => alg.right_mult_map(f, d),
        _ => alg.left_mult_map(f, d),
    };
    m.ok().and_then(|m| m.solve(&target.vec)).is_some()
}

pub fn jacobian(
    alg: &GradedAlgebra,
    chars: &CharacterGroup,
    table: &ComponentTable,
    r: &FixedRing,
    h: &HdetResult,
) -> Result<Jacobian, InvariantError> {
    let get = |g: usize| -> Result<Elem, InvariantError> {
        let c = &table.components[g];
        if c.is_zero() {
            return Err(InvariantError::Hypothesis(format!(
                "component of `{}` vanishes up to the truncation degree",
                chars.name(g)
            )));
        }
        c.generator.clone().ok_or_else(|| {
            InvariantError::Hypothesis(format!(
                "component of `{}` is not generated by a single element",
                chars.name(g)
            ))
        })
    };
    let j = get(h.inverse)?;
    let a = get(h.hdet)?;
    let (delta_left, delta_right) = if a.deg + j.deg <= alg.max_degree() {
        (Some(alg.mul(&a, &j)?), Some(alg.mul(&j, &a)?))
    } else {
        (None, None)
    };
    let deltas_proportional = delta_left
        .as_ref()
        .zip(delta_right.as_ref())
        .map(|(l, r)| l.proportional(r));
    let deltas_in_r = delta_left
        .as_ref()
        .zip(delta_right.as_ref())
        .map(|(l, rr)| r.slices.contains(l) && r.slices.contains(rr));
    Ok(Jacobian {
        a_left_divides_j: divides(alg, &a, &j, Side::Right),
        a_right_divides_j: divides(alg, &a, &j, Side::Left),
        j,
        a,
        delta_left,
        delta_right,
        deltas_proportional,
        deltas_in_r,
    })
}

/// Solve `r · f = target` (`Side::Left`) or `f · r = target` (`Side::Right`) with `r ∈ R`.
pub fn solve_in_r(
    alg: &GradedAlgebra,
    r: &GradedSubspace,
    f: &Elem,
    target: &Elem,
    side: Side,
) -> Option<Elem> {
    if f.deg > target.deg {
        return None;
    }
    let e = target.deg - f.deg;
    let basis = r.elems(e);
    let cols: Vec<SparseVec> = basis
        .iter()
        .map(|b| match side {
            Side::Left => alg.mul(b, f),
            _ => alg.mul(f, b),
        })
        .map(|p| p.map(|p| p.vec))
        .collect::<Result<_, _>>()
        .ok()?;
    let sol = crate::linalg::solve_columns(alg.dim(target.deg), &cols, &target.vec)?;
    let mut acc = Elem::zero(e);
    for (k, c) in sol.entries() {
        acc = acc.add(&basis[*k].scale(c));
    }
    Some(acc)
}

/// `c_{g,h}` with `f_g f_h = c_{g,h} f_{gh}`.
#[derive(Clone, Debug)]
pub enum Cocycle {
    Found(Elem),
    /// The product exceeds the truncation degree.
    Beyond,
    /// No element of `R` works (freeness failure).
    Missing,
}

pub fn cocycle(
    alg: &GradedAlgebra,
    chars: &CharacterGroup,
    table: &ComponentTable,
    g: usize,
    h: usize,
) -> Option<Cocycle> {
    let fg = table.f(g)?;
    let fh = table.f(h)?;
    let gh = chars.group.mul(g, h);
    let fgh = table.f(gh)?;
    if fg.deg + fh.deg > alg.max_degree() {
        return Some(Cocycle::Beyond);
    }
    let prod = alg.mul(fg, fh).unwrap();
    Some(
        match solve_in_r(alg, table.fixed(), fgh, &prod, Side::Left) {
            Some(c) => Cocycle::Found(c),
            None => Cocycle::Missing,
        },
    )
}

/// `c R_e = R_e c` for every degree in range.
pub fn is_normal_in(alg: &GradedAlgebra, r: &GradedSubspace, c: &Elem) -> bool {
    (0..=alg.max_degree().saturating_sub(c.deg)).all(|e| {
        let basis = r.elems(e);
        let d = c.deg + e;
        span_products(alg, std::slice::from_ref(c), &basis, d)
            == span_products(alg, &basis, std::slice::from_ref(c), d)
    })
}

/// The twist `φ_g` on the generators of `R`: `f_g r = φ_g(r) f_g`.
#[derive(Clone, Debug)]
pub struct Twist {
    pub character: usize,
    /// Images of the generators (None when beyond the truncation degree).
    pub images: Vec<Option<Elem>>,
    /// Multiplicativity on products of generator pairs within range.
    pub multiplicative: bool,
    /// Some generator image could not be found in `R`.
    pub missing: bool,
}

pub fn twist(
    alg: &GradedAlgebra,
    table: &ComponentTable,
    r: &FixedRing,
    g: usize,
) -> Option<Twist> {
    let f = table.f(g)?;
    let dmax = alg.max_degree();
    let mut missing = false;
    let images: Vec<Option<Elem>> = r
        .generators
        .iter()
        .map(|x| {
            if f.deg + x.deg > dmax {
                return None;
            }
            let target = alg.mul(f, x).unwrap();
            let s = solve_in_r(alg, &r.slices, f, &target, Side::Left);
            missing |= s.is_none();
            s
        })
        .collect();
    let mut multiplicative = !missing;
    for (i, x) in r.generators.iter().enumerate() {
        for (k, y) in r.generators.iter().enumerate() {
            if f.deg + x.deg + y.deg > dmax {
                continue;
            }
            let (Some(px), Some(py)) = (&images[i], &images[k]) else {
                continue;
            };
            let lhs = alg.mul(&alg.mul(f, x).unwrap(), y).unwrap();
            let rhs = alg.mul(&alg.mul(px, py).unwrap(), f).unwrap();
            if lhs != rhs {
                multiplicative = false;
            }
        }
    }
    Some(Twist {
        character: g,
        images,
        multiplicative,
        missing,
    })
}

/// Covariant modules and algebra.
#[derive(Clone, Debug)]
pub struct Covariant {
    /// `A R_{≥1}`.
    pub left_ideal: GradedSubspace,
    /// `R_{≥1} A`.
    pub right_ideal: GradedSubspace,
    /// `(R_{≥1})`.
    pub two_sided: GradedSubspace,
    pub left_series: Series,
    pub right_series: Series,
    pub algebra_series: Series,
    pub tepid: bool,
}

pub fn covariant(alg: &GradedAlgebra, r: &FixedRing) -> Covariant {
    let left_ideal = alg.ideal_slices(&r.generators, Side::Left);
    let right_ideal = alg.ideal_slices(&r.generators, Side::Right);
    let two_sided = alg.ideal_slices(&r.generators, Side::TwoSided);
    let to_series = |s: &GradedSubspace| series::from_dims(&s.codims());
    Covariant {
        left_series: to_series(&left_ideal),
        right_series: to_series(&right_ideal),
        algebra_series: to_series(&two_sided),
        tepid: left_ideal == right_ideal,
        left_ideal,
        right_ideal,
        two_sided,
    }
}

/// Frobenius structure on `⊕_{g ∈ G₀} k f̄_g` and on the covariant algebra.
#[derive(Clone, Debug)]
pub struct FrobeniusReport {
    /// `(g, partner, λ)` with `f_g f_partner ≡ λ j` modulo `R_{≥1}`.
    pub pairing: Vec<(usize, usize, Option<Scalar>)>,
    pub nondegenerate: bool,
    /// `(g, holds)` for `j ∝ f_{hdet⁻¹ g⁻¹} f_g`.
    pub factorizations: Vec<(usize, bool)>,
    /// `None` when the covariant algebra is not finite below the truncation degree.
    pub covariant_frobenius: Option<bool>,
}

pub fn frobenius(
    alg: &GradedAlgebra,
    chars: &CharacterGroup,
    table: &ComponentTable,
    h: &HdetResult,
    cov: &Covariant,
) -> FrobeniusReport {
    let grp = &chars.group;
    let hinv = h.inverse;
    let j = table.f(hinv).cloned();
    let mut pairing = Vec::new();
    let mut factorizations = Vec::new();
    for g in table.g0() {
        let partner = grp.mul(grp.inv(g), hinv);
        let lam = match (table.f(g), table.f(partner), &j) {
            (Some(a), Some(b), Some(j)) if a.deg + b.deg == j.deg => {
                let p = alg.mul(a, b).unwrap();
                j.ratio_to(&p)
            }
            _ => None,
        };
        pairing.push((g, partner, lam));
        let left = grp.mul(hinv, grp.inv(g));
        let holds = match (table.f(left), table.f(g), &j) {
            (Some(a), Some(b), Some(j)) if a.deg + b.deg <= alg.max_degree() => {
                j.proportional(&alg.mul(a, b).unwrap())
            }
            _ => false,
        };
        factorizations.push((g, holds));
    }
    let nondegenerate = pairing
        .iter()
        .all(|(_, _, l)| l.as_ref().is_some_and(|l| !l.is_zero()));
    FrobeniusReport {
        pairing,
        nondegenerate,
        factorizations,
        covariant_frobenius: covariant_is_frobenius(alg, &cov.two_sided),
    }
}

/// Frobenius test for the finite-dimensional quotient `A/I`: one-dimensional
/// top and nondegenerate multiplication pairings into it.
pub fn covariant_is_frobenius(alg: &GradedAlgebra, ideal: &GradedSubspace) -> Option<bool> {
    let codims = ideal.codims();
    let top = codims.iter().rposition(|&c| c != 0)?;
    if top + 1 >= codims.len() {
        return None;
    }
    if codims[top] != 1 {
        return Some(false);
    }
    let reps = |d: usize| -> Vec<Elem> {
        ideal.slices[d]
            .non_pivots()
            .into_iter()
            .map(|k| alg.basis_elem(d as u32, k))
            .collect()
    };
    let top_slice = &ideal.slices[top];
    let top_coord = top_slice.non_pivots()[0];
    for d in 0..=top {
        let (l, r) = (reps(d), reps(top - d));
        if l.len() != r.len() {
            return Some(false);
        }
        let rows: Vec<SparseVec> = l
            .iter()
            .map(|a| {
                let entries = r
                    .iter()
                    .enumerate()
                    .filter_map(|(k, b)| {
                        let p = top_slice.reduce(&alg.mul(a, b).unwrap().vec);
                        p.get(top_coord).cloned().map(|c| (k, c))
                    })
                    .collect();
                SparseVec::from_entries(entries)
            })
            .collect();
        if Matrix::from_rows(r.len(), rows).rank() != l.len() {
            return Some(false);
        }
    }
    Some(true)
}

/// Outcome of the Nakayama identities for a supplied automorphism `μ`.
#[derive(Clone, Debug)]
pub struct NakayamaReport {
    /// Relations map into the ideal and `μ` is bijective on every slice.
    pub automorphism: bool,
    /// `Ξ^l_{hdet}(h)·μ(a) = μ(Ξ^r_{hdet}(h)·a)` up to degree 4; witness on failure.
    pub winding_identity: Result<(), String>,
    pub preserves_r: bool,
    pub mu_j_proportional: bool,
    pub mu_a_proportional: bool,
    /// `μ_R(r)` with `j μ_R(r) = μ(r) j`, per generator of `R`.
    pub mu_r: Vec<Option<Elem>>,
    pub mu_r_identity: bool,
    /// `(ℓ_R, ℓ_A, deg j)` when all three are known.
    pub index: Option<(u32, u32, u32)>,
}

impl NakayamaReport {
    pub fn index_holds(&self) -> Option<bool> {
        self.index.map(|(lr, la, dj)| lr == la + dj)
    }
}

/// Matrices of a graded endomorphism given by generator images.
pub fn endomorphism_matrices(
    alg: &GradedAlgebra,
    images: &[NCPoly],
) -> Result<Vec<Matrix>, AlgebraError> {
    let gens: Vec<Elem> = images
        .iter()
        .map(|p| alg.reduce(p))
        .collect::<Result<_, _>>()?;
    for (k, g) in gens.iter().enumerate() {
        if g.deg != alg.degrees()[k] && !g.is_zero() {
            return Err(AlgebraError::Inhomogeneous);
        }
    }
    let mut out = Vec::new();
    for d in 0..=alg.max_degree() {
        let cols: Vec<SparseVec> = alg
            .basis(d)
            .iter()
            .map(|w| {
                let mut acc = Elem::one();
                for &x in w {
                    acc = alg.mul(&acc, &gens[x as usize]).unwrap();
                }
                if acc.deg != d {
                    SparseVec::new()
                } else {
                    acc.vec
                }
            })
            .collect();
        out.push(Matrix::from_columns(alg.dim(d), &cols));
    }
    Ok(out)
}

pub fn nakayama_checks(
    action: &ActionModel,
    images: &[NCPoly],
    chars: &CharacterGroup,
    r: &FixedRing,
    h: &HdetResult,
    jac: &Jacobian,
) -> Result<NakayamaReport, InvariantError> {
    let alg = &action.alg;
    let hopf = &action.hopf;
    let mu = endomorphism_matrices(alg, images)?;
    let mut automorphism = mu.iter().all(|m| m.rank() == m.nrows());
    for rel in &alg.presentation().relations {
        if !alg.reduce(&rel.substitute(images))?.is_zero() {
            automorphism = false;
        }
    }
    let apply = |e: &Elem| Elem::new(e.deg, mu[e.deg as usize].mul_vec(&e.vec));
    let hv = &chars.chars[h.hdet].values;
    let wl = hopf
        .winding(hv, WindingSide::Left)
        .map_err(|e| InvariantError::Precondition(e.to_string()))?;
    let wr = hopf
        .winding(hv, WindingSide::Right)
        .map_err(|e| InvariantError::Precondition(e.to_string()))?;
    let mut winding_identity = Ok(());
    'outer: for k in 0..hopf.dim() {
        let hl = wl.column(k);
        let hr = wr.column(k);
        for d in 0..=alg.max_degree().min(4) {
            for b in alg.basis_elems(d) {
                let lhs = action.act(&hl, &apply(&b));
                let rhs = apply(&action.act(&hr, &b));
                if lhs != rhs {
                    winding_identity =
                        Err(format!("h = {}, a = {}", hopf.labels[k], alg.format(&b)));
                    break 'outer;
                }
            }
        }
    }
    let preserves_r = (0..=alg.max_degree())
        .all(|d| r.slices.slice(d).map(&mu[d as usize]) == *r.slices.slice(d));
    let mu_j_proportional = jac.j.proportional(&apply(&jac.j));
    let mu_a_proportional = jac.a.proportional(&apply(&jac.a));
    let j = &jac.j;
    let mu_r: Vec<Option<Elem>> = r
        .generators
        .iter()
        .map(|g| {
            if g.deg + j.deg > alg.max_degree() {
                return None;
            }
            let target = alg.mul(&apply(g), j).unwrap();
            let m = alg.left_mult_map(j, g.deg).ok()?;
            m.solve(&target.vec).map(|v| Elem::new(g.deg, v))
        })
        .collect();
    let mu_r_identity = mu_r
        .iter()
        .zip(&r.generators)
        .all(|(m, g)| m.as_ref() == Some(g));
    let index = match (r.polynomial_certificate, h.koszul_degree()) {
        (true, Some(la)) => Some((r.generator_degrees().iter().sum(), la, j.deg)),
        _ => None,
    };
    Ok(NakayamaReport {
        automorphism,
        winding_identity,
        preserves_r,
        mu_j_proportional,
        mu_a_proportional,
        mu_r,
        mu_r_identity,
        index,
    })
}

/// Verdicts of the divisibility chain relating `δ` and the trace discriminant.
#[derive(Clone, Debug)]
pub struct RadicalChain {
    pub delta_divides_dis: bool,
    pub pair_products_divide_power: bool,
    pub dis_divides_power: bool,
}

impl RadicalChain {
    pub fn radical_equal(&self) -> bool {
        self.delta_divides_dis && self.pair_products_divide_power && self.dis_divides_power
    }
}

/// Trace discriminant of `A` over `R` in the basis `{f_g}`, as a polynomial in the generators of `R`.
#[derive(Clone, Debug)]
pub struct TraceDiscriminant {
    pub determinant: CPoly,
    /// `∏_g f_{g⁻¹} f_g`.
    pub closed_form: CPoly,
    pub proportional: bool,
    pub chain: Option<RadicalChain>,
    /// Whether `R` is central in `A`; the value is still computed when it is not.
    pub r_central: bool,
}

/// Whether each generator of `R` commutes with each generator of `A`.
pub fn r_is_central(alg: &GradedAlgebra, r: &FixedRing) -> bool {
    r.generators.iter().all(|t| {
        (0..alg.ngens()).all(|x| {
            let g = alg.gen(x);
            t.deg + g.deg > alg.max_degree() || alg.mul(t, &g).unwrap() == alg.mul(&g, t).unwrap()
        })
    })
}

pub fn trace_discriminant(
    action: &ActionModel,
    chars: &CharacterGroup,
    table: &ComponentTable,
    r: &FixedRing,
    h: &HdetResult,
    jac: &Jacobian,
) -> Result<TraceDiscriminant, InvariantError> {
    let alg = &action.alg;
    if !matches!(action.kind, ActionKind::DualGroup { .. }) {
        return Err(InvariantError::Precondition(
            "trace discriminant needs a dual-group action".into(),
        ));
    }
    let r_central = r_is_central(alg, r);
    if !(r.polynomial_certificate && r.commutative) {
        return Err(InvariantError::Precondition(
            "R is not visibly a commutative polynomial ring".into(),
        ));
    }
    let grp = &chars.group;
    let n = grp.order();
    let nv = r.generators.len();
    let in_r = |e: &Elem| -> Result<CPoly, InvariantError> {
        r.to_cpoly(alg, e).ok_or_else(|| {
            InvariantError::Precondition(format!(
                "`{}` is not expressible in the generators of R",
                alg.format(e)
            ))
        })
    };
    // c_{g,g⁻¹} = f_g f_{g⁻¹} lies in R; the trace of f_g f_h on the basis {f_k}
    // is |G| c_{g,h} when gh = 1 and 0 otherwise.
    let mut pair = Vec::with_capacity(n);
    for g in 0..n {
        let (Some(a), Some(b)) = (table.f(g), table.f(grp.inv(g))) else {
            return Err(InvariantError::Hypothesis(format!(
                "component of `{}` is zero",
                chars.name(g)
            )));
        };
        if a.deg + b.deg > alg.max_degree() {
            return Err(InvariantError::Precondition(
                "pair products exceed the truncation degree".into(),
            ));
        }
        pair.push(in_r(&alg.mul(a, b)?)?);
    }
    let mut transpositions = 0;
    for g in 0..n {
        if grp.inv(g) > g {
            transpositions += 1;
        }
    }
    let mut determinant = CPoly::constant(
        nv,
        Scalar::from_int(if transpositions % 2 == 0 { 1 } else { -1 }),
    );
    let order = Scalar::from_int(n as i64);
    for p in &pair {
        determinant = determinant.mul(&p.scale(&order));
    }
    let mut closed_form = CPoly::one(nv);
    for g in 0..n {
        closed_form = closed_form.mul(&pair[grp.inv(g)]);
    }
    let proportional = determinant.proportional(&closed_form);

    let chain = match &jac.delta_left {
        None => None,
        Some(delta) => {
            let delta = in_r(delta)?;
            let o = grp.element_order(h.inverse) as u32;
            let mut jo = Elem::one();
            for _ in 0..o {
                if jo.deg + jac.j.deg > alg.max_degree() {
                    return Ok(TraceDiscriminant {
                        determinant,
                        closed_form,
                        proportional,
                        chain: None,
                        r_central,
                    });
                }
                jo = alg.mul(&jo, &jac.j)?;
            }
            let fm_n = in_r(&jo)?.pow(n as u32 / o);
            Some(RadicalChain {
                delta_divides_dis: delta.divides(&determinant),
                pair_products_divide_power: pair.iter().all(|p| p.divides(&fm_n)),
                dis_divides_power: determinant.divides(&fm_n.pow(n as u32)),
            })
        }
    };
    Ok(TraceDiscriminant {
        determinant,
        closed_form,
        proportional,
        chain,
        r_central,
    })
}

/// Factor `target ∈ A_g` as a product of degree-one generators `f_h`, left to right.
pub fn steinberg_factorization(
    alg: &GradedAlgebra,
    chars: &CharacterGroup,
    table: &ComponentTable,
    target: &Elem,
    g: usize,
) -> Option<Vec<usize>> {
    let cands: Vec<usize> = table
        .g0()
        .into_iter()
        .filter(|&h| table.components[h].degree() == Some(1))
        .collect();
    fn rec(
        alg: &GradedAlgebra,
        chars: &CharacterGroup,
        table: &ComponentTable,
        cands: &[usize],
        w: &Elem,
        g: usize,
    ) -> Option<Vec<usize>> {
        if w.deg == 0 {
            return (!w.is_zero()).then(Vec::new);
        }
        for &h in cands {
            let rest = chars.group.mul(chars.group.inv(h), g);
            if table.components[rest].slices.slice(w.deg - 1).is_zero() {
                continue;
            }
            let f = table.f(h)?;
            let Ok(m) = alg.left_mult_map(f, w.deg - 1) else {
                continue;
            };
            let Some(q) = m.solve(&w.vec) else { continue };
            let q = Elem::new(w.deg - 1, q);
            if !table.components[rest].slices.contains(&q) {
                continue;
            }
            if let Some(mut tail) = rec(alg, chars, table, cands, &q, rest) {
                tail.insert(0, h);
                return Some(tail);
            }
        }
        None
    }
    rec(alg, chars, table, &cands, target, g)
}

/// Hilbert data of the isotypic decomposition.
#[derive(Clone, Debug)]
pub struct Isotypic {
    /// Per supplied idempotent: name and image dimensions.
    pub idempotents: Vec<(String, Vec<usize>)>,
    /// `A_G = ⊕_g A_g`.
    pub a_g: Vec<usize>,
    /// Complement dimensions.
    pub a_gc: Vec<usize>,
    /// Ranks over `R` when the series quotient is a polynomial.
    pub rank_a_g: Option<i64>,
    pub rank_a_gc: Option<i64>,
    /// Images of the character idempotents equal the components.
    pub idempotents_match_components: bool,
    /// `dim R_d + Σ_{g≠ε} dim (A_g)_d + dim (A_{G^c})_d = dim A_d`, with the
    /// complement read off the non-character idempotents when they are supplied.
    pub dimension_identity: bool,
}

fn rank_over(series_: &[i64], r: &[i64], max_gen: u32) -> Option<i64> {
    let q = series::div(series_, r);
    match series::degree(&q) {
        None => Some(0),
        Some(d) if d + (max_gen.max(1) as usize) < q.len() => Some(series::eval_at_one(&q)),
        _ => None,
    }
}

pub fn isotypic(
    action: &ActionModel,
    table: &ComponentTable,
    r: &FixedRing,
    idempotents: &[(String, SparseVec, Option<usize>)],
) -> Isotypic {
    let alg = &action.alg;
    let dmax = alg.max_degree();
    let images: Vec<(String, Vec<Subspace>, Option<usize>)> = idempotents
        .iter()
        .map(|(n, e, ch)| {
            let s = (0..=dmax).map(|d| action.matrix_of(d, e).image()).collect();
            (n.clone(), s, *ch)
        })
        .collect();
    let idempotents_match_components = images.iter().all(|(_, s, ch)| {
        ch.is_none_or(|g| s.as_slice() == table.components[g].slices.slices.as_slice())
    });
    let a_g = table.sum_dims();
    let hil = alg.hilbert();
    let a_gc: Vec<usize> = hil.iter().zip(&a_g).map(|(a, b)| a - b).collect();
    let others: Vec<&Vec<Subspace>> = images
        .iter()
        .filter(|(_, _, ch)| ch.is_none())
        .map(|(_, s, _)| s)
        .collect();
    let dimension_identity = if others.is_empty() {
        true
    } else {
        (0..=dmax as usize)
            .all(|d| a_g[d] + others.iter().map(|s| s[d].dim()).sum::<usize>() == hil[d])
    };
    let rs = r.hilbert();
    let max_gen = r.generator_degrees().into_iter().max().unwrap_or(1);
    Isotypic {
        idempotents: images
            .iter()
            .map(|(n, s, _)| (n.clone(), s.iter().map(Subspace::dim).collect()))
            .collect(),
        rank_a_g: rank_over(&series::from_dims(&a_g), &rs, max_gen),
        rank_a_gc: rank_over(&series::from_dims(&a_gc), &rs, max_gen),
        a_g,
        a_gc,
        idempotents_match_components,
        dimension_identity,
    }
}

/// Jacobian of `A_G` under its grading by `G₀`, recovered from its Hilbert series.
#[derive(Clone, Debug)]
pub struct JacobianTransfer {
    pub xi: Series,
    pub character: Option<usize>,
    pub agrees: bool,
}

/// For a dual-group action `A_G = A` carries the same grading, so the comparison is immediate.
pub fn jacobian_transfer(
    table: &ComponentTable,
    r: &FixedRing,
    jac: &Jacobian,
    dual: bool,
) -> JacobianTransfer {
    let xi = series::div(&series::from_dims(&table.sum_dims()), &r.hilbert());
    if dual {
        let character = table
            .g0()
            .into_iter()
            .find(|&g| table.f(g).is_some_and(|f| f.proportional(&jac.j)));
        return JacobianTransfer {
            xi,
            character,
            agrees: character.is_some(),
        };
    }
    let character = xi_degree(&xi).and_then(|deg| {
        let c: Vec<usize> = table
            .g0()
            .into_iter()
            .filter(|&g| table.components[g].degree() == Some(deg as u32))
            .collect();
        (c.len() == 1).then(|| c[0])
    });
    let agrees = character
        .and_then(|g| table.f(g))
        .is_some_and(|f| f.proportional(&jac.j));
    JacobianTransfer {
        xi,
        character,
        agrees,
    }
}

/// `A_g A_h ⊆ A_{gh}` on all basis products within the truncation degree; returns a witness on failure.
pub fn check_component_products(
    alg: &GradedAlgebra,
    chars: &CharacterGroup,
    table: &ComponentTable,
) -> Result<(), String> {
    let dmax = alg.max_degree();
    let g0 = table.g0();
    for &g in &g0 {
        for &h in &g0 {
            let gh = chars.group.mul(g, h);
            for d1 in 1..dmax {
                let left = table.components[g].slices.elems(d1);
                if left.is_empty() {
                    continue;
                }
                for d2 in 1..=dmax - d1 {
                    let target = table.components[gh].slices.slice(d1 + d2);
                    for b in table.components[h].slices.elems(d2) {
                        for a in &left {
                            let p = alg.mul(a, &b).unwrap();
                            if !target.contains(&p.vec) {
                                return Err(format!(
                                    "({}) in A_{} times ({}) in A_{}",
                                    alg.format(a),
                                    chars.name(g),
                                    alg.format(&b),
                                    chars.name(h)
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
