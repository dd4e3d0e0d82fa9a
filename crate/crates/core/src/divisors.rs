//! Degree-one left and right divisors of homogeneous elements.
//!
//! A line `𝕜v ⊆ A₁` is a left divisor of `f` when `f ∈ v·A`, and a right divisor
//! when `f ∈ A·v`. Candidate mode tests a fixed family of lines. Certificate mode
//! (two generators of degree one) computes the binary form in `(s, t)` whose
//! zeros are exactly the lines `s·x₁ + t·x₂` dividing `f`, then splits off the
//! candidate lines and reports any leftover factor.

use thiserror::Error;

use crate::cpoly::CPoly;
use crate::linalg::Matrix;
use crate::ncalg::{Elem, GradedAlgebra};
use crate::scalars::Scalar;

/// Upper bound on the number of minors inspected in certificate mode.
const MINOR_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error("certificate mode needs exactly two generators of degree one")]
    CertificateShape,
    #[error("element must have positive degree at most {max}, found {found}")]
    Degree { found: u32, max: u32 },
    #[error("candidate `{0}` is not a nonzero element of degree one")]
    Candidate(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorSide {
    /// `f ∈ v·A`.
    Left,
    /// `f ∈ A·v`.
    Right,
}

impl DivisorSide {
    pub fn name(self) -> &'static str {
        match self {
            DivisorSide::Left => "left",
            DivisorSide::Right => "right",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Candidates,
    Certificate,
}

/// The binary form cutting out the divisor lines.
#[derive(Clone, Debug)]
pub struct Certificate {
    /// Monic form in `s, t`; its zeros `(s : t)` are the lines `s·x₁ + t·x₂`.
    pub form: CPoly,
    /// What is left after removing every candidate line; constant when the
    /// candidate family accounts for all divisors.
    pub residual: CPoly,
    /// Every minor was inspected.
    pub exhaustive: bool,
}

#[derive(Clone, Debug)]
pub struct DivisorReport {
    pub side: DivisorSide,
    /// Confirmed lines, each normalized to leading coefficient 1.
    pub lines: Vec<Elem>,
    pub certificate: Option<Certificate>,
}

impl DivisorReport {
    /// Possible divisors outside the candidate family.
    pub fn residual_warning(&self) -> bool {
        self.certificate
            .as_ref()
            .is_some_and(|c| c.residual.terms().any(|(e, _)| e.iter().any(|&p| p > 0)))
    }

    pub fn contains(&self, line: &Elem) -> bool {
        self.lines.iter().any(|l| l.proportional(line))
    }
}

/// Whether `v` divides `f` on the given side.
pub fn is_divisor(alg: &GradedAlgebra, v: &Elem, f: &Elem, side: DivisorSide) -> bool {
    if v.deg > f.deg {
        return false;
    }
    let d = f.deg - v.deg;
    let m = match side {
        DivisorSide::Left => alg.left_mult_map(v, d),
        DivisorSide::Right => alg.right_mult_map(v, d),
    };
    m.ok().and_then(|m| m.solve(&f.vec)).is_some()
}

/// The default candidate lines: degree-one generators and `x_i + ζ x_j` for `i < j`
/// and every `N`-th root of unity `ζ`, with `N` the working conductor.
pub fn candidate_lines(alg: &GradedAlgebra, n: u32) -> Vec<Elem> {
    let gens: Vec<usize> = (0..alg.ngens())
        .filter(|&x| alg.degrees()[x] == 1)
        .collect();
    let mut out: Vec<Elem> = gens.iter().map(|&x| alg.gen(x)).collect();
    for (a, &i) in gens.iter().enumerate() {
        for &j in &gens[a + 1..] {
            for k in 0..n {
                let z = Scalar::root_of_unity(n, k as i64);
                out.push(alg.gen(i).add(&alg.gen(j).scale(&z)));
            }
        }
    }
    out.into_iter().map(|e| e.normalized()).collect()
}

pub fn divisors(
    alg: &GradedAlgebra,
    f: &Elem,
    side: DivisorSide,
    mode: Mode,
    conductor: u32,
    extra: &[Elem],
) -> Result<DivisorReport, DivisorError> {
    if f.deg == 0 || f.deg > alg.max_degree() || f.is_zero() {
        return Err(DivisorError::Degree {
            found: f.deg,
            max: alg.max_degree(),
        });
    }
    for e in extra {
        if e.deg != 1 || e.is_zero() {
            return Err(DivisorError::Candidate(alg.format(e)));
        }
    }
    let mut cands = candidate_lines(alg, conductor);
    for e in extra {
        let e = e.normalized();
        if !cands.iter().any(|c| c.proportional(&e)) {
            cands.push(e);
        }
    }
    let certificate = match mode {
        Mode::Candidates => None,
        Mode::Certificate => Some(certificate(alg, f, side, &cands)?),
    };
    let lines = cands
        .into_iter()
        .filter(|v| is_divisor(alg, v, f, side))
        .collect();
    Ok(DivisorReport {
        side,
        lines,
        certificate,
    })
}

/// Univariate polynomial, coefficient `k` of `s^k`, without trailing zeros.
type UPoly = Vec<Scalar>;

fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

fn rem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().inv().unwrap();
    while r.len() >= b.len() {
        let c = r.last().unwrap() * &lb;
        let shift = r.len() - b.len();
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] = &r[shift + k] - &(&c * bk);
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn monic(p: UPoly) -> UPoly {
    match p.last() {
        Some(l) => {
            let inv = l.inv().unwrap();
            p.iter().map(|c| c * &inv).collect()
        }
        None => p,
    }
}

fn gcd(a: UPoly, b: UPoly) -> UPoly {
    let (mut a, mut b) = (a, b);
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

/// Exact quotient by `s - root`, if it divides.
fn divide_linear(p: &UPoly, root: &Scalar) -> Option<UPoly> {
    if p.is_empty() {
        return None;
    }
    let n = p.len() - 1;
    let mut q = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for k in (1..=n).rev() {
        carry = &p[k] + &(&carry * root);
        q[k - 1] = carry.clone();
    }
    (&p[0] + &(&carry * root)).is_zero().then_some(q)
}

/// Lagrange interpolation through `(k, values[k])`.
fn interpolate(values: &[Scalar]) -> UPoly {
    let n = values.len();
    let mut out = vec![Scalar::zero(); n];
    for (k, y) in values.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        let mut basis: UPoly = vec![Scalar::one()];
        let mut denom = Scalar::one();
        for j in (0..n).filter(|&j| j != k) {
            let mut next = vec![Scalar::zero(); basis.len() + 1];
            for (i, c) in basis.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - &(c * &Scalar::from_int(j as i64));
            }
            basis = next;
            denom = &denom * &Scalar::from_int(k as i64 - j as i64);
        }
        let scale = y / &denom;
        for (i, c) in basis.iter().enumerate() {
            out[i] = &out[i] + &(c * &scale);
        }
    }
    trim(out)
}

/// Row subsets of size `k` from `0..n`, in lexicographic order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

fn certificate(
    alg: &GradedAlgebra,
    f: &Elem,
    side: DivisorSide,
    cands: &[Elem],
) -> Result<Certificate, DivisorError> {
    if alg.ngens() != 2 || alg.degrees().iter().any(|&d| d != 1) {
        return Err(DivisorError::CertificateShape);
    }
    let d = f.deg;
    let mult = |x: usize| -> Matrix {
        let g = alg.gen(x);
        match side {
            DivisorSide::Left => alg.left_mult_map(&g, d - 1).unwrap(),
            DivisorSide::Right => alg.right_mult_map(&g, d - 1).unwrap(),
        }
    };
    let (m1, m2) = (mult(0), mult(1));
    let r = alg.dim(d - 1);
    let m = alg.dim(d);
    // Dense [s·M1 + M2 | f] at s = 0, …, r; every minor has degree at most r in s.
    let samples: Vec<Vec<Vec<Scalar>>> = (0..=r)
        .map(|k| {
            let sk = Scalar::from_int(k as i64);
            let mk = m1.scale(&sk).add(&m2).to_dense();
            let fv = f.vec.to_dense(m);
            mk.into_iter()
                .zip(fv)
                .map(|(mut row, c)| {
                    row.push(c);
                    row
                })
                .collect()
        })
        .collect();
    let mut g: UPoly = Vec::new();
    let mut t_mult = usize::MAX;
    let mut exhaustive = true;
    for (count, rows) in combinations(m, r + 1).enumerate() {
        if count == MINOR_CAP {
            exhaustive = false;
            break;
        }
        let values: Vec<Scalar> = samples
            .iter()
            .map(|dense| Matrix::from_dense(rows.iter().map(|&i| dense[i].clone()).collect()).det())
            .collect();
        let p = interpolate(&values);
        if p.is_empty() {
            continue;
        }
        t_mult = t_mult.min(r + 1 - p.len());
        g = gcd(g, p);
        if g.len() == 1 && t_mult == 0 {
            break;
        }
    }
    if t_mult == usize::MAX {
        // Every minor vanishes: every line passes the rank test.
        return Ok(Certificate {
            form: CPoly::zero(2),
            residual: CPoly::zero(2),
            exhaustive,
        });
    }
    let form = binary_form(&g, t_mult);
    let mut rest = g;
    let mut rest_t = t_mult;
    let x1 = alg.gen(0);
    let x2 = alg.gen(1);
    for c in cands {
        let (a, b) = (coordinate(c, &x1), coordinate(c, &x2));
        if b.is_zero() {
            rest_t = 0;
            continue;
        }
        let root = &a / &b;
        while let Some(q) = divide_linear(&rest, &root) {
            rest = q;
        }
    }
    let residual = binary_form(&monic(rest), rest_t);
    Ok(Certificate {
        form,
        residual,
        exhaustive,
    })
}

fn coordinate(v: &Elem, basis_gen: &Elem) -> Scalar {
    let (idx, _) = basis_gen.vec.leading().unwrap();
    v.vec.get(idx).cloned().unwrap_or_else(Scalar::zero)
}

/// `t^{t_mult} · t^{deg p} p(s/t)`, made monic.
fn binary_form(p: &UPoly, t_mult: usize) -> CPoly {
    let deg = p.len().saturating_sub(1);
    let mut out = CPoly::zero(2);
    for (k, c) in p.iter().enumerate() {
        out.add_term(vec![k as u32, (deg - k + t_mult) as u32], c.clone());
    }
    out.monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn euclid_and_interpolation() {
        // (s - 1)(s - 2) and (s - 1)(s + 3) share s - 1.
        let a = vec![s(2), s(-3), s(1)];
        let b = vec![s(-3), s(2), s(1)];
        assert_eq!(gcd(a.clone(), b), vec![s(-1), s(1)]);
        assert_eq!(divide_linear(&a, &s(2)), Some(vec![s(-1), s(1)]));
        assert_eq!(divide_linear(&a, &s(3)), None);
        let values: Vec<Scalar> = (0..3).map(|k| s(k * k - 3 * k + 2)).collect();
        assert_eq!(interpolate(&values), a);
    }

    #[test]
    fn combination_count() {
        assert_eq!(combinations(5, 3).count(), 10);
        assert_eq!(combinations(3, 3).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(2, 3).count(), 0);
    }

    #[test]
    fn generator_divides_itself() {
        let alg = GradedAlgebra::build(
            crate::ncalg::Presentation::parse(&[("u", 1), ("v", 1)], &["v*u - i*u*v"]).unwrap(),
            4,
        )
        .unwrap();
        let u = alg.parse("u").unwrap();
        let rep = divisors(&alg, &u, DivisorSide::Left, Mode::Certificate, 4, &[]).unwrap();
        assert_eq!(rep.lines.len(), 1);
        assert!(rep.contains(&u));
        assert!(!rep.residual_warning());
    }
}
