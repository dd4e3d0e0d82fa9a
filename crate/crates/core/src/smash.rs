//! Degree-truncated smash products `A#H`, the radical ideal of an action, the
//! dis-radical, rife checks and principal radicals.
//!
//! An element of `A_d ⊗ H` is stored as a vector indexed by `i * dim H + k`,
//! where `i` runs over the basis of `A_d` and `k` over the basis of `H`.

use thiserror::Error;

use crate::hopf::{ActionKind, ActionModel, CharacterGroup, HopfData};
use crate::invariants::ComponentTable;
use crate::linalg::{SparseVec, Subspace};
use crate::ncalg::{AlgebraError, Elem, GradedAlgebra, GradedSubspace, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmashError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A homogeneous element of `A#H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashElem {
    pub deg: u32,
    pub vec: SparseVec,
}

impl SmashElem {
    /// `a # h`.
    pub fn pure(a: &Elem, h: &SparseVec, dim_h: usize) -> SmashElem {
        let mut raw = Vec::new();
        for (i, x) in a.vec.entries() {
            for (k, y) in h.entries() {
                raw.push((i * dim_h + k, x * y));
            }
        }
        SmashElem {
            deg: a.deg,
            vec: SparseVec::from_entries(raw),
        }
    }

    /// The `A`-part of `Σ a_k # b_k` grouped by `H`-basis index.
    fn split(&self, dim_h: usize) -> Vec<(usize, Elem)> {
        let mut parts: Vec<(usize, Vec<(usize, crate::Scalar)>)> = Vec::new();
        for (idx, c) in self.vec.entries() {
            let (i, k) = (idx / dim_h, idx % dim_h);
            match parts.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, v)) => v.push((i, c.clone())),
                None => parts.push((k, vec![(i, c.clone())])),
            }
        }
        parts
            .into_iter()
            .map(|(k, v)| (k, Elem::new(self.deg, SparseVec::from_entries(v))))
            .collect()
    }
}

/// `(a#h)(b#k) = Σ a(h₁·b) # h₂k`.
pub fn smash_multiply(
    action: &ActionModel,
    x: &SmashElem,
    y: &SmashElem,
) -> Result<SmashElem, SmashError> {
    let alg = &action.alg;
    let hopf = &action.hopf;
    let n = hopf.dim();
    let deg = x.deg + y.deg;
    if deg > alg.max_degree() {
        return Err(AlgebraError::DegreeOverflow {
            needed: deg,
            max: alg.max_degree(),
        }
        .into());
    }
    let mut acc = SparseVec::new();
    for (h, a) in x.split(n) {
        for (k, b) in y.split(n) {
            for (h1, h2, c) in &hopf.comult[h] {
                let hb = action.act_basis(*h1, &b);
                if hb.is_zero() {
                    continue;
                }
                let ab = alg.mul(&a, &hb)?;
                let hk = &hopf.mult[*h2][k];
                acc.add_scaled(c, &SmashElem::pure(&ab, hk, n).vec);
            }
        }
    }
    Ok(SmashElem { deg, vec: acc })
}

/// The pertinency ideal `(A#H)(1#Λ)(A#H)` and its trace on `A#1`.
#[derive(Clone, Debug)]
pub struct Radical {
    /// `ℛ = 𝒫 ∩ (A#1)`, as slices of `A`.
    pub slices: GradedSubspace,
    /// `dim 𝒫_d`.
    pub pertinency_dims: Vec<usize>,
    /// `dim (A#H / 𝒫)_d`.
    pub quotient_dims: Vec<usize>,
}

/// `(1#Λ)(b#1) = Σ Λ₁·b # Λ₂`.
fn integral_times(action: &ActionModel, integral: &SparseVec, b: &Elem) -> SparseVec {
    let n = action.hopf.dim();
    let mut acc = SparseVec::new();
    for (k, c) in integral.entries() {
        for (l1, l2, v) in &action.hopf.comult[*k] {
            let lb = action.act_basis(*l1, b);
            if lb.is_zero() {
                continue;
            }
            acc.add_scaled(
                &(c * v),
                &SmashElem::pure(&lb, &SparseVec::unit(*l2), n).vec,
            );
        }
    }
    acc
}

/// Slices of the pertinency ideal. Since `(1#h)(1#Λ) = ε(h)(1#Λ)`, the ideal is
/// `(A#1)·M` with `M` spanned by `(1#Λ)(b#1)(1#k)`, so each slice is `M_d` plus
/// the left products of generators with lower slices.
fn pertinency_slices(action: &ActionModel, integral: &SparseVec) -> Vec<Subspace> {
    let alg = &action.alg;
    let hopf = &action.hopf;
    let n = hopf.dim();
    let mut out: Vec<Subspace> = Vec::new();
    for d in 0..=alg.max_degree() {
        let mut s = Subspace::new(alg.dim(d) * n);
        for b in alg.basis_elems(d) {
            let t = integral_times(action, integral, &b);
            for k in 0..n {
                if s.is_full() {
                    break;
                }
                s.insert(right_by(hopf, &t, k));
            }
        }
        for x in 0..alg.ngens() {
            let dx = alg.degrees()[x];
            if dx > d || s.is_full() {
                continue;
            }
            for row in out[(d - dx) as usize].rows() {
                let e = SmashElem {
                    deg: d - dx,
                    vec: row.clone(),
                };
                let mut acc = SparseVec::new();
                for (k, a) in e.split(n) {
                    let xa = alg.letter_times(x as u8, &a).unwrap();
                    acc.add_scaled(
                        &crate::Scalar::one(),
                        &SmashElem::pure(&xa, &SparseVec::unit(k), n).vec,
                    );
                }
                s.insert(acc);
                if s.is_full() {
                    break;
                }
            }
        }
        out.push(s);
    }
    out
}

/// `v · (1#b_k)`.
fn right_by(hopf: &HopfData, v: &SparseVec, k: usize) -> SparseVec {
    let n = hopf.dim();
    let mut raw = Vec::new();
    for (idx, c) in v.entries() {
        for (m, y) in hopf.mult[idx % n][k].entries() {
            raw.push((idx / n * n + m, c * y));
        }
    }
    SparseVec::from_entries(raw)
}

/// The radical ideal `ℛ_{A,H}` by the general smash-product computation.
pub fn radical_ideal(action: &ActionModel, integral: &SparseVec) -> Radical {
    let alg = &action.alg;
    let hopf = &action.hopf;
    let n = hopf.dim();
    let pert = pertinency_slices(action, integral);
    let mut slices = Vec::new();
    for (d, p) in pert.iter().enumerate() {
        let dim = alg.dim(d as u32);
        if p.is_zero() {
            slices.push(Subspace::new(dim));
            continue;
        }
        let ones = Subspace::spanned_by(
            dim * n,
            (0..dim).map(|i| {
                SparseVec::from_entries(
                    hopf.unit
                        .entries()
                        .iter()
                        .map(|(k, c)| (i * n + k, c.clone()))
                        .collect(),
                )
            }),
        );
        let meet = p.intersect(&ones).unwrap();
        // Read off the A-coordinate from the first unit entry.
        let (k0, c0) = hopf.unit.entries()[0].clone();
        let c0inv = c0.inv().unwrap();
        let s = Subspace::spanned_by(
            dim,
            meet.rows().iter().map(|r| {
                SparseVec::from_entries(
                    r.entries()
                        .iter()
                        .filter(|(idx, _)| idx % n == k0)
                        .map(|(idx, c)| (idx / n, c * &c0inv))
                        .collect(),
                )
            }),
        );
        slices.push(s);
    }
    let pertinency_dims: Vec<usize> = pert.iter().map(Subspace::dim).collect();
    let quotient_dims = pert.iter().map(Subspace::codim).collect();
    Radical {
        slices: GradedSubspace { slices },
        pertinency_dims,
        quotient_dims,
    }
}

/// `⋂_g A·A_g` over all of `G`, for a dual-group action.
pub fn radical_shortcut(action: &ActionModel, table: &ComponentTable) -> Option<GradedSubspace> {
    if !matches!(action.kind, ActionKind::DualGroup { .. }) {
        return None;
    }
    let alg = &action.alg;
    let mut acc = alg.full_subspace(false);
    for c in &table.components {
        acc = acc.intersect(&alg.ideal_closure(&c.slices, Side::Left));
    }
    Some(acc)
}

/// Two-sided ideal of `H` generated by all commutators of basis elements.
pub fn commutator_ideal(hopf: &HopfData) -> Subspace {
    let n = hopf.dim();
    let mut s = Subspace::new(n);
    for a in 0..n {
        for b in a + 1..n {
            s.insert(hopf.mult[a][b].sub(&hopf.mult[b][a]));
        }
    }
    loop {
        let before = s.dim();
        for r in s.rows().to_vec() {
            for k in 0..n {
                s.insert(hopf.mul(&SparseVec::unit(k), &r));
                s.insert(hopf.mul(&r, &SparseVec::unit(k)));
            }
        }
        if s.dim() == before {
            return s;
        }
    }
}

/// Whether `v ∈ S ⊗ S` for a vector of `H ⊗ H` indexed by `i * n + j`.
fn in_tensor_square(s: &Subspace, v: &SparseVec, n: usize) -> bool {
    let mut rows: Vec<Vec<(usize, crate::Scalar)>> = vec![Vec::new(); n];
    let mut cols: Vec<Vec<(usize, crate::Scalar)>> = vec![Vec::new(); n];
    for (idx, c) in v.entries() {
        rows[idx / n].push((idx % n, c.clone()));
        cols[idx % n].push((idx / n, c.clone()));
    }
    rows.into_iter()
        .chain(cols)
        .all(|r| s.contains(&SparseVec::from_entries(r)))
}

/// `Δ(Λ) − Σ_g p_g ⊗ p_{g⁻¹} ∈ I_com ⊗ I_com`, with `p_g` the character idempotents.
pub fn hopf_rife(
    hopf: &HopfData,
    integral: &SparseVec,
    chars: &CharacterGroup,
    idempotents: &[SparseVec],
) -> bool {
    let n = hopf.dim();
    let mut x = hopf.comult_vec(integral);
    for g in 0..chars.len() {
        let p = &idempotents[g];
        let q = &idempotents[chars.group.inv(g)];
        let mut raw = Vec::new();
        for (i, a) in p.entries() {
            for (j, b) in q.entries() {
                raw.push((i * n + j, a * b));
            }
        }
        x = x.sub(&SparseVec::from_entries(raw));
    }
    in_tensor_square(&commutator_ideal(hopf), &x, n)
}

/// Action-level rife data.
#[derive(Clone, Debug)]
pub struct RifeReport {
    pub hopf_rife: bool,
    /// `A·j = j·A` in every degree.
    pub j_normal: bool,
    /// `ℛ = A·j·A` in every degree.
    pub radical_is_ideal_of_j: bool,
    /// `ℛ ⊆ A·j`.
    pub radical_in_aj: bool,
}

impl RifeReport {
    pub fn action_rife(&self) -> bool {
        self.hopf_rife && self.j_normal && self.radical_is_ideal_of_j
    }
}

pub fn rife_action_check(
    alg: &GradedAlgebra,
    hopf_rife: bool,
    j: &Elem,
    radical: &GradedSubspace,
) -> RifeReport {
    let aj = alg.ideal_slices(std::slice::from_ref(j), Side::Left);
    let ja = alg.ideal_slices(std::slice::from_ref(j), Side::Right);
    let aja = alg.ideal_slices(std::slice::from_ref(j), Side::TwoSided);
    RifeReport {
        hopf_rife,
        j_normal: aj == ja,
        radical_is_ideal_of_j: *radical == aja,
        radical_in_aj: radical.is_subspace_of(&aj),
    }
}

/// `Δ_{A,H} = ℛ ∩ R` with a principal generator when one is found.
#[derive(Clone, Debug)]
pub struct DisRadical {
    pub slices: GradedSubspace,
    /// Lowest-degree element, when the lowest slice is one-dimensional.
    pub candidate: Option<Elem>,
    /// `candidate · R_{d - deg}` spans every slice up to the truncation degree.
    pub principal: bool,
}

impl DisRadical {
    pub fn generator(&self) -> Option<&Elem> {
        self.candidate.as_ref().filter(|_| self.principal)
    }
}

pub fn dis_radical(
    alg: &GradedAlgebra,
    radical: &GradedSubspace,
    r: &GradedSubspace,
) -> DisRadical {
    let slices = radical.intersect(r);
    let candidate = slices
        .lowest_degree()
        .filter(|&d| slices.slice(d).dim() == 1)
        .map(|d| slices.elems(d).remove(0).normalized());
    let principal = candidate.as_ref().is_some_and(|c| {
        (c.deg..=alg.max_degree()).all(|d| {
            let span = Subspace::spanned_by(
                alg.dim(d),
                r.elems(d - c.deg)
                    .iter()
                    .map(|x| alg.mul(c, x).unwrap().vec),
            );
            span == *slices.slice(d)
        })
    });
    DisRadical {
        slices,
        candidate,
        principal,
    }
}

/// Outcome of the principal-radical search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrincipalRadical {
    /// A normal element generating `ℛ` as a two-sided ideal up to the truncation degree.
    Principal(Elem),
    /// Lowest nonzero degree and the dimension of that slice.
    Undetermined {
        lowest_degree: Option<u32>,
        lowest_dim: usize,
    },
}

pub fn principal_radical(alg: &GradedAlgebra, radical: &GradedSubspace) -> PrincipalRadical {
    let lowest = radical.lowest_degree();
    let undetermined = |dim| PrincipalRadical::Undetermined {
        lowest_degree: lowest,
        lowest_dim: dim,
    };
    let Some(d) = lowest else {
        return undetermined(0);
    };
    let slice = radical.slice(d);
    if slice.dim() != 1 {
        return undetermined(slice.dim());
    }
    let w = radical.elems(d).remove(0).normalized();
    let gens = std::slice::from_ref(&w);
    let left = alg.ideal_slices(gens, Side::Left);
    let right = alg.ideal_slices(gens, Side::Right);
    if left == right && left == *radical {
        PrincipalRadical::Principal(w)
    } else {
        undetermined(1)
    }
}

/// `{w : (w, 0) ∈ Σ_i A·(p_i·a, q_i·a)}` for pairs `(p_i, q_i)` of elements of `H`.
/// The set is a left ideal of `A`.
pub fn paired_left_ideal(action: &ActionModel, pairs: &[(SparseVec, SparseVec)]) -> GradedSubspace {
    let alg = &action.alg;
    let mut modules: Vec<Subspace> = Vec::new();
    let mut out = Vec::new();
    for d in 0..=alg.max_degree() {
        let dim = alg.dim(d);
        let embed = |a: &Elem, b: &Elem| -> SparseVec {
            let mut raw: Vec<_> = a.vec.entries().to_vec();
            raw.extend(b.vec.entries().iter().map(|(i, c)| (i + dim, c.clone())));
            SparseVec::from_entries(raw)
        };
        let mut s = Subspace::new(2 * dim);
        for a in alg.basis_elems(d) {
            for (p, q) in pairs {
                s.insert(embed(&action.act(p, &a), &action.act(q, &a)));
            }
        }
        for x in 0..alg.ngens() {
            let dx = alg.degrees()[x];
            if dx > d {
                continue;
            }
            let low = alg.dim(d - dx);
            for row in modules[(d - dx) as usize].rows() {
                let first = Elem::new(
                    d - dx,
                    SparseVec::from_entries(
                        row.entries()
                            .iter()
                            .filter(|(i, _)| *i < low)
                            .cloned()
                            .collect(),
                    ),
                );
                let second = Elem::new(
                    d - dx,
                    SparseVec::from_entries(
                        row.entries()
                            .iter()
                            .filter(|(i, _)| *i >= low)
                            .map(|(i, c)| (i - low, c.clone()))
                            .collect(),
                    ),
                );
                s.insert(embed(
                    &alg.letter_times(x as u8, &first).unwrap(),
                    &alg.letter_times(x as u8, &second).unwrap(),
                ));
            }
        }
        let first_only = Subspace::spanned_by(2 * dim, (0..dim).map(SparseVec::unit));
        let meet = s.intersect(&first_only).unwrap();
        out.push(Subspace::spanned_by(dim, meet.rows().iter().cloned()));
        modules.push(s);
    }
    GradedSubspace { slices: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn unit_acts_trivially() {
        let p = presets::e42_kac_palyutkin().load(Some(4)).unwrap();
        let n = p.hopf().dim();
        let b = p.alg().parse("u*v + 3*v^2").unwrap();
        let k = SparseVec::unit(p.hopf().index_of("yz").unwrap());
        let one = SmashElem::pure(&Elem::one(), &p.hopf().unit, n);
        let bk = SmashElem::pure(&b, &k, n);
        assert_eq!(smash_multiply(&p.action, &one, &bk).unwrap(), bk);
    }

    #[test]
    fn z_moves_past_u() {
        let p = presets::e42_kac_palyutkin().load(Some(4)).unwrap();
        let h = p.hopf();
        let n = h.dim();
        let z = SparseVec::unit(h.index_of("z").unwrap());
        let u = p.alg().parse("u").unwrap();
        let v = p.alg().parse("v").unwrap();
        let lhs = smash_multiply(
            &p.action,
            &SmashElem::pure(&Elem::one(), &z, n),
            &SmashElem::pure(&u, &h.unit, n),
        )
        .unwrap();
        // Δ(z) = ½(z⊗z + z⊗xz + yz⊗z − yz⊗xz) with z·u = v and yz·u = −v.
        let xz = SparseVec::unit(h.index_of("xz").unwrap());
        assert_eq!(lhs, SmashElem::pure(&v, &xz, n));
    }

    #[test]
    fn integral_is_idempotent_in_smash() {
        let p = presets::e42_kac_palyutkin().load(Some(2)).unwrap();
        let n = p.hopf().dim();
        let l = SmashElem::pure(&Elem::one(), &p.integral, n);
        assert_eq!(smash_multiply(&p.action, &l, &l).unwrap(), l);
    }

    #[test]
    fn overflow_is_reported() {
        let p = presets::e42_kac_palyutkin().load(Some(2)).unwrap();
        let n = p.hopf().dim();
        let u2 = SmashElem::pure(&p.alg().parse("u^2").unwrap(), &p.hopf().unit, n);
        assert!(smash_multiply(&p.action, &u2, &u2).is_err());
    }
}
