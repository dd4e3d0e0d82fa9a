//! Degree-truncated models of connected graded algebras `T(V)/(relations)`.
//!
//! Each slice `A_d` is built from lower slices as
//! `(⊕_x A_{d - deg x} · x) / span{ b · r }`, where `b` runs over the basis of
//! `A_{d - deg r}` and `r` over the relations. The basis of `A_d` consists of
//! the normal words (non-leading words of the ideal slice) sorted from largest
//! to smallest, so index 0 is always the largest normal word.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::poly::{
    cmp_words, format_term, format_word, parse_poly, word_degree, NCPoly, ParseError, Word,
};
use crate::scalars::Scalar;

/// Default truncation degree.
pub const DEFAULT_MAX_DEGREE: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive degree")]
    ZeroDegree(String),
    #[error("too many generators ({0}, at most 255)")]
    TooManyGenerators(usize),
    #[error("relation {index} is not homogeneous")]
    InhomogeneousRelation { index: usize },
    #[error("relation {index} is zero")]
    ZeroRelation { index: usize },
    #[error("truncation degree {max} is below the relation degree {needed}")]
    DegreeTooSmall { needed: u32, max: u32 },
    #[error("degree {needed} exceeds the truncation degree {max}")]
    DegreeOverflow { needed: u32, max: u32 },
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Generators with degrees and homogeneous relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub names: Vec<String>,
    pub degrees: Vec<u32>,
    pub relations: Vec<NCPoly>,
}

impl Presentation {
    pub fn new(
        names: Vec<String>,
        degrees: Vec<u32>,
        relations: Vec<NCPoly>,
    ) -> Result<Self, AlgebraError> {
        assert_eq!(names.len(), degrees.len());
        if names.len() > 255 {
            return Err(AlgebraError::TooManyGenerators(names.len()));
        }
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(AlgebraError::DuplicateGenerator(n.clone()));
            }
            if degrees[k] == 0 {
                return Err(AlgebraError::ZeroDegree(n.clone()));
            }
        }
        for (index, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(AlgebraError::ZeroRelation { index });
            }
            match r.homogeneous_degree(&degrees) {
                Some(d) if d > 0 => {}
                _ => return Err(AlgebraError::InhomogeneousRelation { index }),
            }
        }
        Ok(Presentation {
            names,
            degrees,
            relations,
        })
    }

    /// Build from `(name, degree)` pairs and relation strings.
    pub fn parse(gens: &[(&str, u32)], relations: &[&str]) -> Result<Self, AlgebraError> {
        let names: Vec<String> = gens.iter().map(|g| g.0.to_string()).collect();
        let degrees = gens.iter().map(|g| g.1).collect();
        let rels = relations
            .iter()
            .map(|r| parse_poly(r, &names))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(names, degrees, rels)
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn relation_degree(&self, k: usize) -> u32 {
        self.relations[k].homogeneous_degree(&self.degrees).unwrap()
    }

    pub fn max_relation_degree(&self) -> u32 {
        (0..self.relations.len())
            .map(|k| self.relation_degree(k))
            .max()
            .unwrap_or(0)
    }

    pub fn parse_poly(&self, s: &str) -> Result<NCPoly, ParseError> {
        parse_poly(s, &self.names)
    }

    /// Conductor needed by the relation coefficients.
    pub fn conductor(&self) -> u32 {
        use num_integer::Integer;
        self.relations.iter().fold(1, |a, r| a.lcm(&r.conductor()))
    }
}

/// A homogeneous element of a graded model, in the basis of its slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    pub deg: u32,
    pub vec: SparseVec,
}

impl Elem {
    pub fn new(deg: u32, vec: SparseVec) -> Self {
        Elem { deg, vec }
    }

    pub fn zero(deg: u32) -> Self {
        Elem {
            deg,
            vec: SparseVec::new(),
        }
    }

    pub fn one() -> Self {
        Elem {
            deg: 0,
            vec: SparseVec::unit(0),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.vec.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Elem {
        Elem {
            deg: self.deg,
            vec: self.vec.scale(c),
        }
    }

    pub fn add(&self, o: &Elem) -> Elem {
        assert_eq!(self.deg, o.deg, "adding elements of different degrees");
        Elem {
            deg: self.deg,
            vec: self.vec.add(&o.vec),
        }
    }

    pub fn sub(&self, o: &Elem) -> Elem {
        assert_eq!(self.deg, o.deg, "subtracting elements of different degrees");
        Elem {
            deg: self.deg,
            vec: self.vec.sub(&o.vec),
        }
    }

    /// Rescaled so the coefficient of the largest basis word is 1.
    pub fn normalized(&self) -> Elem {
        let mut v = self.vec.clone();
        v.normalize();
        Elem {
            deg: self.deg,
            vec: v,
        }
    }

    /// Whether `o` is a nonzero scalar multiple of `self`.
    pub fn proportional(&self, o: &Elem) -> bool {
        self.deg == o.deg && self.vec.proportional(&o.vec)
    }

    pub fn ratio_to(&self, o: &Elem) -> Option<Scalar> {
        if self.deg != o.deg {
            return None;
        }
        self.vec.ratio_to(&o.vec)
    }
}

/// Per-degree subspaces of a graded model, degrees `0..=D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    pub slices: Vec<Subspace>,
}

impl GradedSubspace {
    pub fn dims(&self) -> Vec<usize> {
        self.slices.iter().map(Subspace::dim).collect()
    }

    pub fn codims(&self) -> Vec<usize> {
        self.slices.iter().map(Subspace::codim).collect()
    }

    pub fn slice(&self, d: u32) -> &Subspace {
        &self.slices[d as usize]
    }

    pub fn contains(&self, e: &Elem) -> bool {
        self.slices
            .get(e.deg as usize)
            .is_some_and(|s| s.contains(&e.vec))
    }

    pub fn is_subspace_of(&self, o: &GradedSubspace) -> bool {
        self.slices
            .iter()
            .zip(&o.slices)
            .all(|(a, b)| a.is_subspace_of(b))
    }

    pub fn intersect(&self, o: &GradedSubspace) -> GradedSubspace {
        GradedSubspace {
            slices: self
                .slices
                .iter()
                .zip(&o.slices)
                .map(|(a, b)| a.intersect(b).unwrap())
                .collect(),
        }
    }

    pub fn sum(&self, o: &GradedSubspace) -> GradedSubspace {
        GradedSubspace {
            slices: self
                .slices
                .iter()
                .zip(&o.slices)
                .map(|(a, b)| a.sum(b).unwrap())
                .collect(),
        }
    }

    /// Lowest degree with a nonzero slice.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.slices
            .iter()
            .position(|s| !s.is_zero())
            .map(|d| d as u32)
    }

    pub fn elems(&self, d: u32) -> Vec<Elem> {
        self.slices[d as usize]
            .rows()
            .iter()
            .map(|r| Elem::new(d, r.clone()))
            .collect()
    }
}

/// Which side ideal slices are closed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `A · g`.
    Left,
    /// `g · A`.
    Right,
    /// `A · g · A`.
    TwoSided,
}

#[derive(Clone, Debug)]
struct Slice {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    /// For nonempty basis words `b = b' y`: index of `b'` in its slice and the letter `y`.
    prefix: Vec<(usize, u8)>,
    /// `rmul[x][b]` is `b · x` for `b` in the slice of degree `d - deg x`.
    rmul: Vec<Vec<SparseVec>>,
    /// `lmul[x][b]` is `x · b` for `b` in the slice of degree `d - deg x`.
    lmul: Vec<Vec<SparseVec>>,
}

/// A degree-truncated model of a connected graded algebra.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pres: Presentation,
    max_degree: u32,
    slices: Vec<Slice>,
}

impl GradedAlgebra {
    pub fn build(pres: Presentation, max_degree: u32) -> Result<Self, AlgebraError> {
        let needed = pres.max_relation_degree();
        if max_degree < needed {
            return Err(AlgebraError::DegreeTooSmall {
                needed,
                max: max_degree,
            });
        }
        let ng = pres.ngens();
        let mut alg = GradedAlgebra {
            pres,
            max_degree,
            slices: Vec::new(),
        };
        alg.slices.push(Slice {
            words: vec![Vec::new()],
            index: HashMap::from([(Vec::new(), 0)]),
            prefix: vec![(0, 0)],
            rmul: vec![Vec::new(); ng],
            lmul: vec![Vec::new(); ng],
        });
        for d in 1..=max_degree {
            let s = alg.build_slice(d);
            alg.slices.push(s);
        }
        Ok(alg)
    }

    fn build_slice(&self, d: u32) -> Slice {
        let degs = &self.pres.degrees;
        let ng = self.pres.ngens();
        // Candidate words b·x with b a normal word of degree d - deg x.
        let mut cands: Vec<(Word, usize, u8)> = Vec::new();
        for x in 0..ng {
            let dx = degs[x];
            if dx > d {
                continue;
            }
            for (bi, b) in self.slices[(d - dx) as usize].words.iter().enumerate() {
                let mut w = b.clone();
                w.push(x as u8);
                cands.push((w, bi, x as u8));
            }
        }
        cands.sort_by(|a, b| cmp_words(&b.0, &a.0, degs));
        let cand_index: HashMap<(usize, u8), usize> = cands
            .iter()
            .enumerate()
            .map(|(k, (_, bi, x))| ((*bi, *x), k))
            .collect();
        let ncand = cands.len();

        // Relation consequences b·r expressed over candidates.
        let mut rel = Subspace::new(ncand);
        for r in &self.pres.relations {
            let e = r.homogeneous_degree(degs).unwrap();
            if e > d {
                continue;
            }
            let lower = (d - e) as usize;
            for b in 0..self.slices[lower].words.len() {
                let mut entries: Vec<(usize, Scalar)> = Vec::new();
                for (w, c) in r.terms() {
                    let (&x, head) = w.split_last().unwrap();
                    let mut v = Elem::new(lower as u32, SparseVec::unit(b));
                    for &y in head {
                        v = self.times_letter_unchecked(&v, y);
                    }
                    for (bi, cv) in v.vec.entries() {
                        entries.push((cand_index[&(*bi, x)], cv * c));
                    }
                }
                rel.insert(SparseVec::from_entries(entries));
            }
        }

        let mut basis_of_cand = vec![usize::MAX; ncand];
        let mut words = Vec::new();
        for c in rel.non_pivots() {
            basis_of_cand[c] = words.len();
            words.push(cands[c].0.clone());
        }
        let mut row_of_pivot = HashMap::new();
        for (k, &p) in rel.pivots().iter().enumerate() {
            row_of_pivot.insert(p, k);
        }
        let nf_cand = |c: usize| -> SparseVec {
            if basis_of_cand[c] != usize::MAX {
                return SparseVec::unit(basis_of_cand[c]);
            }
            let row = &rel.rows()[row_of_pivot[&c]];
            SparseVec::from_entries(
                row.entries()
                    .iter()
                    .filter(|(i, _)| *i != c)
                    .map(|(i, v)| (basis_of_cand[*i], -v))
                    .collect(),
            )
        };

        let mut rmul = vec![Vec::new(); ng];
        for x in 0..ng {
            let dx = degs[x];
            if dx > d {
                continue;
            }
            let n = self.slices[(d - dx) as usize].words.len();
            rmul[x] = (0..n).map(|b| nf_cand(cand_index[&(b, x as u8)])).collect();
        }

        let index: HashMap<Word, usize> = words
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let prefix = words
            .iter()
            .map(|w| {
                let (&y, head) = w.split_last().unwrap();
                let pd = (d - degs[y as usize]) as usize;
                (self.slices[pd].index[head], y)
            })
            .collect();

        let mut slice = Slice {
            words,
            index,
            prefix,
            rmul,
            lmul: vec![Vec::new(); ng],
        };
        // x · b = (x · b') · y using already built lower slices and the new rmul.
        let mut lmul = vec![Vec::new(); ng];
        for x in 0..ng {
            let dx = degs[x];
            if dx > d {
                continue;
            }
            let lower = d - dx;
            let n = self.slices[lower as usize].words.len();
            lmul[x] = (0..n)
                .map(|b| {
                    if lower == 0 {
                        return slice.rmul[x][0].clone();
                    }
                    let (bp, y) = self.slices[lower as usize].prefix[b];
                    let dy = degs[y as usize];
                    let mid = &self.slices[(lower - dy + dx) as usize].lmul[x][bp];
                    apply_columns(&slice.rmul[y as usize], mid)
                })
                .collect();
        }
        slice.lmul = lmul;
        slice
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn names(&self) -> &[String] {
        &self.pres.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.pres.degrees
    }

    pub fn ngens(&self) -> usize {
        self.pres.ngens()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn dim(&self, d: u32) -> usize {
        self.slices[d as usize].words.len()
    }

    /// Hilbert coefficients `dim A_0, ..., dim A_D`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.slices.iter().map(|s| s.words.len()).collect()
    }

    pub fn basis(&self, d: u32) -> &[Word] {
        &self.slices[d as usize].words
    }

    pub fn word_index(&self, w: &[u8]) -> Option<usize> {
        let d = word_degree(w, self.degrees());
        self.slices.get(d as usize)?.index.get(w).copied()
    }

    fn check_degree(&self, d: u32) -> Result<(), AlgebraError> {
        if d > self.max_degree {
            Err(AlgebraError::DegreeOverflow {
                needed: d,
                max: self.max_degree,
            })
        } else {
            Ok(())
        }
    }

    /// The basis element with index `k` of `A_d`.
    pub fn basis_elem(&self, d: u32, k: usize) -> Elem {
        Elem::new(d, SparseVec::unit(k))
    }

    /// The generator `x` as an element.
    pub fn gen(&self, x: usize) -> Elem {
        let d = self.pres.degrees[x];
        self.reduce_word(&[x as u8]).unwrap_or(Elem::zero(d))
    }

    fn times_letter_unchecked(&self, v: &Elem, x: u8) -> Elem {
        let d = v.deg + self.pres.degrees[x as usize];
        Elem::new(
            d,
            apply_columns(&self.slices[d as usize].rmul[x as usize], &v.vec),
        )
    }

    /// `v · x`.
    pub fn times_letter(&self, v: &Elem, x: u8) -> Result<Elem, AlgebraError> {
        self.check_degree(v.deg + self.pres.degrees[x as usize])?;
        Ok(self.times_letter_unchecked(v, x))
    }

    /// `x · v`.
    pub fn letter_times(&self, x: u8, v: &Elem) -> Result<Elem, AlgebraError> {
        let d = v.deg + self.pres.degrees[x as usize];
        self.check_degree(d)?;
        Ok(Elem::new(
            d,
            apply_columns(&self.slices[d as usize].lmul[x as usize], &v.vec),
        ))
    }

    /// `v · w` for a word `w`.
    pub fn times_word(&self, v: &Elem, w: &[u8]) -> Result<Elem, AlgebraError> {
        self.check_degree(v.deg + word_degree(w, self.degrees()))?;
        let mut acc = v.clone();
        for &x in w {
            acc = self.times_letter_unchecked(&acc, x);
        }
        Ok(acc)
    }

    /// Normal form of a word.
    pub fn reduce_word(&self, w: &[u8]) -> Result<Elem, AlgebraError> {
        self.times_word(&Elem::one(), w)
    }

    /// Normal form of a homogeneous free-algebra element.
    pub fn reduce(&self, p: &NCPoly) -> Result<Elem, AlgebraError> {
        let d = p
            .homogeneous_degree(self.degrees())
            .ok_or(AlgebraError::Inhomogeneous)?;
        self.check_degree(d)?;
        let mut acc = SparseVec::new();
        for (w, c) in p.terms() {
            let v = self.reduce_word(w)?;
            acc.add_scaled(c, &v.vec);
        }
        Ok(Elem::new(d, acc))
    }

    /// Parse and reduce an expression.
    pub fn parse(&self, s: &str) -> Result<Elem, AlgebraError> {
        let p = parse_poly(s, self.names())?;
        self.reduce(&p)
    }

    /// The product `a · b`.
    pub fn mul(&self, a: &Elem, b: &Elem) -> Result<Elem, AlgebraError> {
        let d = a.deg + b.deg;
        self.check_degree(d)?;
        if a.deg == 0 {
            let c = a.vec.get(0).cloned().unwrap_or_else(Scalar::zero);
            return Ok(b.scale(&c));
        }
        let mut acc = SparseVec::new();
        for (k, c) in b.vec.entries() {
            let w = &self.slices[b.deg as usize].words[*k];
            let mut t = a.clone();
            for &x in w {
                t = self.times_letter_unchecked(&t, x);
            }
            acc.add_scaled(c, &t.vec);
        }
        Ok(Elem::new(d, acc))
    }

    /// Product of two free-algebra elements, returned in normal form.
    pub fn multiply(&self, p: &NCPoly, q: &NCPoly) -> Result<NCPoly, AlgebraError> {
        let a = self.reduce(p)?;
        let b = self.reduce(q)?;
        Ok(self.to_poly(&self.mul(&a, &b)?))
    }

    pub fn to_poly(&self, e: &Elem) -> NCPoly {
        let words = &self.slices[e.deg as usize].words;
        NCPoly::from_terms(
            e.vec
                .entries()
                .iter()
                .map(|(k, c)| (words[*k].clone(), c.clone())),
        )
    }

    /// Text of an element, largest word first.
    pub fn format(&self, e: &Elem) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let words = &self.slices[e.deg as usize].words;
        let mut out = String::new();
        for (k, (i, c)) in e.vec.entries().iter().enumerate() {
            let body = if words[*i].is_empty() {
                None
            } else {
                Some(format_word(&words[*i], self.names()))
            };
            out.push_str(&format_term(c, body, k == 0));
        }
        out
    }

    pub fn display<'a>(&'a self, e: &'a Elem) -> ElemDisplay<'a> {
        ElemDisplay { alg: self, elem: e }
    }

    /// Matrix of `x ↦ p·x` from `A_d` to `A_{d + deg p}`.
    pub fn left_mult_map(&self, p: &Elem, d: u32) -> Result<Matrix, AlgebraError> {
        let t = p.deg + d;
        self.check_degree(t)?;
        let cols: Vec<SparseVec> = (0..self.dim(d))
            .map(|k| self.mul(p, &self.basis_elem(d, k)).unwrap().vec)
            .collect();
        Ok(Matrix::from_columns(self.dim(t), &cols))
    }

    /// Matrix of `x ↦ x·p` from `A_d` to `A_{d + deg p}`.
    pub fn right_mult_map(&self, p: &Elem, d: u32) -> Result<Matrix, AlgebraError> {
        let t = p.deg + d;
        self.check_degree(t)?;
        let cols: Vec<SparseVec> = (0..self.dim(d))
            .map(|k| self.mul(&self.basis_elem(d, k), p).unwrap().vec)
            .collect();
        Ok(Matrix::from_columns(self.dim(t), &cols))
    }

    /// The zero graded subspace.
    pub fn zero_subspace(&self) -> GradedSubspace {
        GradedSubspace {
            slices: (0..=self.max_degree)
                .map(|d| Subspace::new(self.dim(d)))
                .collect(),
        }
    }

    /// The whole algebra (or its positive part).
    pub fn full_subspace(&self, positive: bool) -> GradedSubspace {
        GradedSubspace {
            slices: (0..=self.max_degree)
                .map(|d| {
                    if positive && d == 0 {
                        Subspace::new(1)
                    } else {
                        Subspace::full(self.dim(d))
                    }
                })
                .collect(),
        }
    }

    /// Slices of the ideal generated by `gens` on the given side.
    pub fn ideal_slices(&self, gens: &[Elem], side: Side) -> GradedSubspace {
        self.ideal_closure(&self.span_by_degree(gens), side)
    }

    /// Per-degree span of a list of homogeneous elements (elements above `D` are ignored).
    pub fn span_by_degree(&self, elems: &[Elem]) -> GradedSubspace {
        let mut out = self.zero_subspace();
        for e in elems {
            if e.deg <= self.max_degree {
                out.slices[e.deg as usize].insert(e.vec.clone());
            }
        }
        out
    }

    /// Smallest ideal of the given side containing the graded subspace `seed`.
    pub fn ideal_closure(&self, seed: &GradedSubspace, side: Side) -> GradedSubspace {
        let mut out: Vec<Subspace> = Vec::with_capacity(seed.slices.len());
        for d in 0..=self.max_degree {
            let mut s = seed.slices[d as usize].clone();
            for x in 0..self.ngens() {
                let dx = self.degrees()[x];
                if dx > d {
                    continue;
                }
                let lower = &out[(d - dx) as usize];
                for r in lower.rows() {
                    let e = Elem::new(d - dx, r.clone());
                    if matches!(side, Side::Left | Side::TwoSided) {
                        s.insert(self.letter_times(x as u8, &e).unwrap().vec);
                    }
                    if matches!(side, Side::Right | Side::TwoSided) {
                        s.insert(self.times_letter(&e, x as u8).unwrap().vec);
                    }
                    if s.is_full() {
                        break;
                    }
                }
            }
            out.push(s);
        }
        GradedSubspace { slices: out }
    }

    /// Injectivity of left multiplication by each degree-1 generator on slices below `D`.
    pub fn domain_spot_check(&self) -> DomainReport {
        for d in 0..self.max_degree {
            for x in 0..self.ngens() {
                if self.degrees()[x] != 1 || d + 1 > self.max_degree {
                    continue;
                }
                let cols = &self.slices[(d + 1) as usize].lmul[x];
                let rank = Subspace::spanned_by(self.dim(d + 1), cols.iter().cloned()).dim();
                if rank < self.dim(d) {
                    return DomainReport {
                        passed: false,
                        violation: Some((self.names()[x].clone(), d)),
                    };
                }
            }
        }
        DomainReport {
            passed: true,
            violation: None,
        }
    }

    /// Elements of `A_{d}` for every basis index, as a list.
    pub fn basis_elems(&self, d: u32) -> Vec<Elem> {
        (0..self.dim(d)).map(|k| self.basis_elem(d, k)).collect()
    }
}

fn apply_columns(cols: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut acc = SparseVec::new();
    for (k, c) in v.entries() {
        acc.add_scaled(c, &cols[*k]);
    }
    acc
}

pub struct ElemDisplay<'a> {
    alg: &'a GradedAlgebra,
    elem: &'a Elem,
}

impl fmt::Display for ElemDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alg.format(self.elem))
    }
}

/// Outcome of [`GradedAlgebra::domain_spot_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainReport {
    pub passed: bool,
    /// Generator name and source degree of the first non-injective multiplication.
    pub violation: Option<(String, u32)>,
}

/// Hilbert coefficients by row reduction of the full ideal slice
/// `span{ m·r·m' }` inside every free slice. Exponential in `D`; meant as an
/// independent check of [`GradedAlgebra::build`].
pub fn brute_force_hilbert(pres: &Presentation, max_degree: u32) -> Vec<usize> {
    let degs = &pres.degrees;
    let ng = pres.ngens();
    let mut words: Vec<Vec<Word>> = vec![vec![Vec::new()]];
    for d in 1..=max_degree {
        let mut ws = Vec::new();
        for x in 0..ng {
            if degs[x] <= d {
                for w in &words[(d - degs[x]) as usize] {
                    let mut w2 = w.clone();
                    w2.push(x as u8);
                    ws.push(w2);
                }
            }
        }
        words.push(ws);
    }
    let mut out = vec![1];
    for d in 1..=max_degree {
        let index: HashMap<&Word, usize> = words[d as usize]
            .iter()
            .enumerate()
            .map(|(k, w)| (w, k))
            .collect();
        let mut ideal = Subspace::new(words[d as usize].len());
        for r in &pres.relations {
            let e = r.homogeneous_degree(degs).unwrap();
            if e > d {
                continue;
            }
            for a in 0..=(d - e) {
                for m in &words[a as usize] {
                    for m2 in &words[(d - e - a) as usize] {
                        let entries = r
                            .terms()
                            .map(|(w, c)| {
                                let mut full = m.clone();
                                full.extend_from_slice(w);
                                full.extend_from_slice(m2);
                                (index[&full], c.clone())
                            })
                            .collect();
                        ideal.insert(SparseVec::from_entries(entries));
                    }
                }
            }
        }
        out.push(ideal.codim());
    }
    out
}
