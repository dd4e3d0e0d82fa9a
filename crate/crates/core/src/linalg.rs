//! Exact linear algebra over [`Scalar`]: sparse vectors, row-sparse matrices,
//! and subspaces kept in fully reduced row echelon form.
//!
//! Pivots are always the smallest column index present in a row, so callers
//! that index their basis from "largest" to "smallest" get leading terms as
//! pivots.

use std::fmt;

use thiserror::Error;

use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, Scalar::one())],
        }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            SparseVec::new()
        } else {
            SparseVec {
                entries: vec![(i, c)],
            }
        }
    }

    /// Collect arbitrary `(index, coefficient)` pairs, summing duplicates.
    pub fn from_entries(mut raw: Vec<(usize, Scalar)>) -> Self {
        raw.sort_by_key(|e| e.0);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(raw.len());
        for (i, c) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|e| !e.1.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    /// Smallest index with its coefficient.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) => {
                    if ia < ib {
                        out.push(a.next().unwrap());
                    } else if ib < ia {
                        let (ib, cb) = b.next().unwrap();
                        out.push((*ib, cb * c));
                    } else {
                        let (i, mut ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        ca += &(cb * c);
                        if !ca.is_zero() {
                            out.push((i, ca));
                        }
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (ib, cb) = b.next().unwrap();
                    out.push((*ib, cb * c));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), other);
        out
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, b) = (self.entries[i].0, other.entries[j].0);
            if a < b {
                i += 1;
            } else if b < a {
                j += 1;
            } else {
                acc += &(&self.entries[i].1 * &other.entries[j].1);
                i += 1;
                j += 1;
            }
        }
        acc
    }

    /// Reindex entries through `f` (which must be injective on the support).
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(
            self.entries
                .iter()
                .map(|(i, c)| (f(*i), c.clone()))
                .collect(),
        )
    }

    /// Returns `c` with `other = c * self`, when the two are proportional and `self` is nonzero.
    pub fn ratio_to(&self, other: &SparseVec) -> Option<Scalar> {
        let (i, c) = self.leading()?;
        let oc = other.get(i)?;
        let r = oc / c;
        if &self.scale(&r) == other {
            Some(r)
        } else {
            None
        }
    }

    /// Nonzero vectors spanning the same line.
    pub fn proportional(&self, other: &SparseVec) -> bool {
        self.ratio_to(other).is_some()
    }

    /// Rescale so the leading (smallest-index) coefficient is 1; returns the factor removed.
    pub fn normalize(&mut self) -> Scalar {
        match self.leading() {
            None => Scalar::zero(),
            Some((_, c)) => {
                let c = c.clone();
                let inv = c.inv().unwrap();
                for e in self.entries.iter_mut() {
                    e.1 = &e.1 * &inv;
                }
                c
            }
        }
    }

    /// Promote every coefficient to conductor `n`.
    pub fn promote(&self, n: u32) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, c)| (*i, c.promote(n)))
                .collect(),
        }
    }
}

/// A matrix stored by sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            ncols,
            rows: vec![SparseVec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            nrows: n,
            ncols: n,
            rows: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_dense(entries: Vec<Vec<Scalar>>) -> Self {
        let nrows = entries.len();
        let ncols = entries.first().map_or(0, |r| r.len());
        assert!(entries.iter().all(|r| r.len() == ncols), "ragged matrix");
        Matrix {
            nrows,
            ncols,
            rows: entries.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().is_none_or(|m| m < ncols)));
        Matrix {
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// Build from column images: column `j` is `cols[j]`, an element of a space of dimension `nrows`.
    pub fn from_columns(nrows: usize, cols: &[SparseVec]) -> Self {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.entries() {
                assert!(*i < nrows, "column entry out of range");
                rows[*i].push((j, c.clone()));
            }
        }
        Matrix {
            nrows,
            ncols: cols.len(),
            rows: rows
                .into_iter()
                .map(|entries| SparseVec { entries })
                .collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    /// Column `j` as a sparse vector.
    pub fn column(&self, j: usize) -> SparseVec {
        SparseVec::from_entries(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.get(j).map(|c| (i, c.clone())))
                .collect(),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].get(j).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| r.to_dense(self.ncols)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_columns(self.ncols, &self.rows)
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    /// `M x`.
    pub fn mul_vec(&self, x: &SparseVec) -> SparseVec {
        let mut entries = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let d = r.dot(x);
            if !d.is_zero() {
                entries.push((i, d));
            }
        }
        SparseVec { entries }
    }

    pub fn try_mul_vec(&self, x: &SparseVec) -> Result<SparseVec, LinalgError> {
        if let Some(m) = x.max_index() {
            if m >= self.ncols {
                return Err(LinalgError::DimensionMismatch {
                    expected: self.ncols,
                    found: m + 1,
                });
            }
        }
        Ok(self.mul_vec(x))
    }

    /// `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.ncols, other.nrows,
            "dimension mismatch in matrix product"
        );
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, c) in r.entries() {
                    acc.add_scaled(c, &other.rows[*k]);
                }
                acc
            })
            .collect();
        Matrix {
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// `self - c I` (square matrices).
    pub fn minus_scalar(&self, c: &Scalar) -> Matrix {
        assert_eq!(self.nrows, self.ncols);
        let mut out = self.clone();
        if c.is_zero() {
            return out;
        }
        for (i, r) in out.rows.iter_mut().enumerate() {
            r.add_scaled(&-c, &SparseVec::unit(i));
        }
        out
    }

    /// Row space in reduced echelon form.
    pub fn row_space(&self) -> Subspace {
        Subspace::spanned_by(self.ncols, self.rows.iter().cloned())
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    pub fn kernel(&self) -> Subspace {
        self.row_space().annihilator()
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::spanned_by(self.nrows, self.columns())
    }

    /// Determinant of a square matrix by elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.nrows, self.ncols, "determinant of a non-square matrix");
        let mut m = self.to_dense();
        let n = self.nrows;
        let mut acc = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap(p, c);
                acc = -acc;
            }
            let pivot = m[c][c].clone();
            let inv = pivot.inv().unwrap();
            acc = &acc * &pivot;
            for r in c + 1..n {
                if m[r][c].is_zero() {
                    continue;
                }
                let f = &m[r][c] * &inv;
                for k in c..n {
                    let t = &f * &m[c][k];
                    m[r][k] = &m[r][k] - &t;
                }
            }
        }
        acc
    }

    /// Some `x` with `M x = b`, or `None`.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let n = self.ncols;
        let mut ech = Subspace::new(n + 1);
        for (i, r) in self.rows.iter().enumerate() {
            let mut row = r.clone();
            if let Some(bi) = b.get(i) {
                row.add_scaled(bi, &SparseVec::unit(n));
            }
            ech.insert(row);
        }
        let mut x = Vec::new();
        for row in ech.rows() {
            let (p, _) = row.leading().unwrap();
            if p == n {
                return None;
            }
            if let Some(v) = row.get(n) {
                x.push((p, v.clone()));
            }
        }
        Some(SparseVec::from_entries(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.to_dense() {
            let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Solve `sum_j x_j cols[j] = b` where each column lives in a space of dimension `dim`.
pub fn solve_columns(dim: usize, cols: &[SparseVec], b: &SparseVec) -> Option<SparseVec> {
    Matrix::from_columns(dim, cols).solve(b)
}

/// A subspace of `k^n`, stored as a reduced row echelon basis.
///
/// Rows are sorted by pivot; every pivot entry is 1 and every pivot column is
/// zero outside its row, so the basis is unique and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(SparseVec::unit).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn spanned_by(ambient: usize, vecs: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut s = Subspace::new(ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Column indices that are not pivots, ascending.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.codim());
        let mut k = 0;
        for c in 0..self.ambient {
            if k < self.pivots.len() && self.pivots[k] == c {
                k += 1;
            } else {
                out.push(c);
            }
        }
        out
    }

    /// The remainder of `v` after eliminating all pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.max_index().is_none_or(|m| m < p) {
                break;
            }
            if let Some(c) = v.get(p) {
                let c = -c;
                v.add_scaled(&c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.pivots
                .iter()
                .map(|&p| v.get(p).cloned().unwrap_or_else(Scalar::zero))
                .collect(),
        )
    }

    /// Add `v` to the span; returns true when the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        if let Some(m) = v.max_index() {
            assert!(
                m < self.ambient,
                "vector index {m} outside ambient dimension {}",
                self.ambient
            );
        }
        let mut r = self.reduce(&v);
        if r.is_zero() {
            return false;
        }
        r.normalize();
        let p = r.leading().unwrap().0;
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(p) {
                let c = -c;
                row.add_scaled(&c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for r in &small.rows {
            out.insert(r.clone());
        }
        Ok(out)
    }

    /// Intersection via the Zassenhaus construction: echelonize `[u | u]` and
    /// `[w | 0]`; rows whose first half vanishes span the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::new(self.ambient));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let n = self.ambient;
        let mut z = Subspace::new(2 * n);
        for r in &self.rows {
            let mut v = r.clone();
            v.add_scaled(&Scalar::one(), &r.map_indices(|i| i + n));
            z.insert(v);
        }
        for r in &other.rows {
            z.insert(r.clone());
        }
        let mut out = Subspace::new(n);
        for (row, &p) in z.rows.iter().zip(&z.pivots) {
            if p >= n {
                out.insert(row.map_indices(|i| i - n));
            }
        }
        Ok(out)
    }

    /// Vectors `x` with `<row, x> = 0` for every basis row (plain bilinear pairing).
    pub fn annihilator(&self) -> Subspace {
        let mut out = Subspace::new(self.ambient);
        for f in self.non_pivots() {
            let mut entries = vec![(f, Scalar::one())];
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if let Some(c) = row.get(f) {
                    entries.push((p, -c));
                }
            }
            out.insert(SparseVec::from_entries(entries));
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    /// Image under a linear map given as a matrix with `ncols == ambient`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.ncols(), self.ambient);
        Subspace::spanned_by(m.nrows(), self.rows.iter().map(|r| m.mul_vec(r)))
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn vecd(v: &[i64]) -> SparseVec {
        SparseVec::from_dense(&v.iter().map(|&x| s(x)).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_of_row() {
        let m = Matrix::from_dense(vec![vec![s(1), s(-1)]]);
        let k = m.kernel();
        assert_eq!(k, Subspace::spanned_by(2, [vecd(&[1, 1])]));
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let u = Subspace::spanned_by(3, [vecd(&[1, 0, 0]), vecd(&[0, 1, 0])]);
        let v = Subspace::spanned_by(3, [vecd(&[0, 1, 0]), vecd(&[0, 0, 1])]);
        assert_eq!(
            u.intersect(&v).unwrap(),
            Subspace::spanned_by(3, [vecd(&[0, 1, 0])])
        );
    }

    #[test]
    fn determinant() {
        let m = Matrix::from_dense(vec![
            vec![s(0), s(2), s(1)],
            vec![s(3), s(4), s(0)],
            vec![s(1), s(0), s(0)],
        ]);
        assert_eq!(m.det(), s(-4));
        assert_eq!(
            Matrix::from_dense(vec![vec![s(1), s(2)], vec![s(2), s(4)]]).det(),
            s(0)
        );
    }

    #[test]
    fn solve_with_i() {
        let m = Matrix::from_dense(vec![vec![Scalar::i()]]);
        let x = m.solve(&SparseVec::from_dense(&[s(-1)])).unwrap();
        assert_eq!(x, SparseVec::from_dense(&[Scalar::i()]));
    }

    #[test]
    fn inconsistent_solve() {
        let m = Matrix::from_dense(vec![vec![s(1), s(1)], vec![s(2), s(2)]]);
        assert!(m.solve(&vecd(&[1, 3])).is_none());
        assert!(m.solve(&vecd(&[1, 2])).is_some());
    }

    #[test]
    fn dimension_mismatch() {
        let u = Subspace::new(2);
        let v = Subspace::new(3);
        assert_eq!(
            u.intersect(&v),
            Err(LinalgError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
        let m = Matrix::identity(2);
        assert!(m.try_mul_vec(&SparseVec::unit(4)).is_err());
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::spanned_by(3, [vecd(&[1, 2, 3]), vecd(&[2, 4, 7])]);
        let b = Subspace::spanned_by(3, [vecd(&[0, 0, 5]), vecd(&[3, 6, 1])]);
        assert_eq!(a, b);
        assert_eq!(a.rows(), &[vecd(&[1, 2, 0]), vecd(&[0, 0, 1])]);
    }

    fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(prop::collection::vec(-2i64..=2, c), r).prop_map(|rows| {
            Matrix::from_dense(
                rows.into_iter()
                    .map(|r| r.into_iter().map(Scalar::from_int).collect())
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn dimension_formula(a in arb_matrix(3, 5), b in arb_matrix(3, 5)) {
            let u = a.row_space();
            let v = b.row_space();
            let sum = u.sum(&v).unwrap();
            let int = u.intersect(&v).unwrap();
            prop_assert_eq!(u.dim() + v.dim(), sum.dim() + int.dim());
            prop_assert!(int.is_subspace_of(&u) && int.is_subspace_of(&v));
        }

        #[test]
        fn image_contains_products(m in arb_matrix(4, 3), x in prop::collection::vec(-3i64..=3, 3)) {
            let x = vecd(&x);
            let y = m.mul_vec(&x);
            prop_assert!(m.image().contains(&y));
            let sol = m.solve(&y).unwrap();
            prop_assert_eq!(m.mul_vec(&sol), y);
        }

        #[test]
        fn rank_nullity(m in arb_matrix(4, 6)) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), 6);
            for k in m.kernel().rows() {
                prop_assert!(m.mul_vec(k).is_zero());
            }
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}
