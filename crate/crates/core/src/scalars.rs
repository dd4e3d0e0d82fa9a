//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! A [`Scalar`] stores its conductor `N` and the coordinates of a residue
//! modulo the cyclotomic polynomial `Phi_N` in the power basis
//! `1, zeta_N, ..., zeta_N^(phi(N)-1)`. Operands with different conductors
//! are promoted to the least common multiple before arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid scalar literal `{0}`")]
    Parse(String),
}

/// Cached data for one conductor.
#[derive(Debug)]
struct CycloField {
    phi: usize,
    /// `pow_rows[e]` holds the reduced coordinates of `zeta^e` for `0 <= e < max(n, 2 phi)`.
    pow_rows: Vec<Vec<i64>>,
    /// Coefficients of `Phi_N`, lowest degree first.
    poly: Vec<i64>,
}

fn field_cache() -> &'static RwLock<HashMap<u32, Arc<CycloField>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn field(n: u32) -> Arc<CycloField> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(f) = field_cache().read().unwrap().get(&n) {
        return f.clone();
    }
    let built = Arc::new(build_field(n));
    let mut w = field_cache().write().unwrap();
    w.entry(n).or_insert(built).clone()
}

/// The cyclotomic polynomial `Phi_n` with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    field(n).poly.clone()
}

fn compute_cyclotomic(n: u32) -> Vec<i64> {
    // z^n - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = field(d).poly.clone();
            num = exact_div_monic(&num, &den);
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] = rem[k + j]
                    .checked_sub(c.checked_mul(dj).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn build_field(n: u32) -> CycloField {
    let poly = if n == 1 {
        vec![-1, 1]
    } else {
        compute_cyclotomic(n)
    };
    let phi = poly.len() - 1;
    let count = (n as usize).max(2 * phi);
    let mut pow_rows = Vec::with_capacity(count);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    if phi == 1 {
        // Phi_1 = z - 1 or Phi_2 = z + 1: zeta = -poly[0].
        let z = -poly[0];
        let mut v = 1i64;
        for _ in 0..count {
            pow_rows.push(vec![v]);
            v *= z;
        }
    } else {
        for _ in 0..count {
            pow_rows.push(cur.clone());
            // multiply by z and reduce the top coefficient with the monic poly
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..phi {
                    cur[j] = cur[j]
                        .checked_sub(top.checked_mul(poly[j]).expect("overflow"))
                        .expect("overflow");
                }
            }
        }
    }
    CycloField {
        phi,
        pow_rows,
        poly,
    }
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    field(n).phi
}

/// An element of `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct Scalar {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            conductor: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// Build from raw coordinates in the power basis of `Q(zeta_n)`.
    pub fn from_coeffs(n: u32, coeffs: Vec<BigRational>) -> Self {
        let f = field(n);
        assert_eq!(
            coeffs.len(),
            f.phi,
            "coefficient vector must have length phi(N)"
        );
        Scalar {
            conductor: n,
            coeffs,
        }
    }

    /// `zeta_n^k`, reduced.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let f = field(n);
        let e = k.rem_euclid(n as i64) as usize;
        let coeffs = f.pow_rows[e]
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        Scalar {
            conductor: n,
            coeffs,
        }
    }

    /// The distinguished square root of `-1`, `zeta_4`.
    pub fn i() -> Self {
        Scalar::root_of_unity(4, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express in `Q(zeta_m)`; requires `conductor | m`.
    pub fn promote(&self, m: u32) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(
            m.is_multiple_of(self.conductor),
            "cannot promote conductor {} to {}",
            self.conductor,
            m
        );
        let step = (m / self.conductor) as usize;
        let f = field(m);
        let mut out = vec![BigRational::zero(); f.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            add_scaled_row(&mut out, c, &f.pow_rows[k * step]);
        }
        Scalar {
            conductor: m,
            coeffs: out,
        }
    }

    fn joined(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        let m = a.conductor.lcm(&b.conductor);
        (a.promote(m), b.promote(m))
    }

    fn with_conductor<R>(
        a: &Scalar,
        b: &Scalar,
        f: impl FnOnce(u32, &[BigRational], &[BigRational]) -> R,
    ) -> R {
        if a.conductor == b.conductor {
            f(a.conductor, &a.coeffs, &b.coeffs)
        } else {
            let (pa, pb) = Scalar::joined(a, b);
            f(pa.conductor, &pa.coeffs, &pb.coeffs)
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.conductor == 1 || self.coeffs[1..].iter().all(Zero::is_zero) {
            let mut out = Scalar {
                conductor: self.conductor,
                coeffs: vec![BigRational::zero(); self.coeffs.len()],
            };
            out.coeffs[0] = self.coeffs[0].recip();
            return Some(out);
        }
        // Solve (multiplication by self) * x = 1.
        let n = self.conductor;
        let f = field(n);
        let phi = f.phi;
        let mut cols = Vec::with_capacity(phi);
        for j in 0..phi {
            let basis = Scalar {
                conductor: n,
                coeffs: f.pow_rows[j]
                    .iter()
                    .map(|&c| BigRational::from_integer(c.into()))
                    .collect(),
            };
            cols.push((self * &basis).coeffs);
        }
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let sol = rational_solve(&cols, &rhs).expect("nonzero field element is invertible");
        Some(Scalar {
            conductor: n,
            coeffs: sol,
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self, ScalarError> {
        let inv = other.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 {
            self.inv().expect("zero to a negative power")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The same value expressed at the smallest conductor containing it.
    pub fn simplify(&self) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            return Scalar::from_rational(self.coeffs[0].clone());
        }
        let f = field(n);
        for d in 1..n {
            if !n.is_multiple_of(d) || d % 4 == 2 {
                continue;
            }
            let sub_phi = field(d).phi;
            let step = (n / d) as usize;
            let cols: Vec<Vec<BigRational>> = (0..sub_phi)
                .map(|k| {
                    f.pow_rows[k * step]
                        .iter()
                        .map(|&c| BigRational::from_integer(c.into()))
                        .collect()
                })
                .collect();
            if let Some(sol) = rational_solve(&cols, &self.coeffs) {
                return Scalar {
                    conductor: d,
                    coeffs: sol,
                };
            }
        }
        self.clone()
    }

    /// Number of nonzero power-basis terms after simplification.
    pub fn term_count(&self) -> usize {
        self.simplify()
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .count()
    }

    /// Whether the printed form is a single term with coefficient `-1` or negative rational.
    pub fn is_negative_monomial(&self) -> bool {
        let s = self.simplify();
        let nz: Vec<_> = s.coeffs.iter().filter(|c| !c.is_zero()).collect();
        nz.len() == 1 && nz[0].is_negative()
    }

    /// Galois automorphism `zeta_N -> zeta_N^a` applied at the current conductor (`gcd(a, N) = 1`).
    pub fn galois(&self, a: i64) -> Self {
        let n = self.conductor;
        let mut acc = Scalar {
            conductor: n,
            coeffs: vec![BigRational::zero(); self.coeffs.len()],
        };
        let f = field(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (k as i64 * a).rem_euclid(n as i64) as usize;
            add_scaled_row(&mut acc.coeffs, c, &f.pow_rows[e]);
        }
        acc
    }
}

fn add_scaled_row(out: &mut [BigRational], c: &BigRational, row: &[i64]) {
    for (o, &r) in out.iter_mut().zip(row) {
        match r {
            0 => {}
            1 => *o += c,
            -1 => *o -= c,
            _ => *o += c * BigRational::from_integer(r.into()),
        }
    }
}

/// Solve `sum_j x_j cols[j] = rhs` over `Q`; returns `None` when inconsistent.
fn rational_solve(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = rhs.len();
    let n = cols.len();
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=n {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][n].clone();
    }
    Some(x)
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        Scalar::with_conductor(self, other, |_, a, b| a == b)
    }
}

impl Eq for Scalar {}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::with_conductor(self, rhs, |n, a, b| Scalar {
            conductor: n,
            coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect(),
        })
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::with_conductor(self, rhs, |n, a, b| Scalar {
            conductor: n,
            coeffs: a.iter().zip(b).map(|(x, y)| x - y).collect(),
        })
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::with_conductor(self, rhs, mul_coeffs)
    }
}

fn mul_coeffs(n: u32, a: &[BigRational], b: &[BigRational]) -> Scalar {
    let phi = a.len();
    if phi == 1 {
        return Scalar {
            conductor: n,
            coeffs: vec![&a[0] * &b[0]],
        };
    }
    let bnz: Vec<usize> = (0..phi).filter(|&j| !b[j].is_zero()).collect();
    let mut prod = vec![BigRational::zero(); 2 * phi - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for &j in &bnz {
            prod[i + j] += x * &b[j];
        }
    }
    let f = field(n);
    let mut out: Vec<BigRational> = prod.drain(..phi).collect();
    for (k, c) in prod.iter().enumerate() {
        if !c.is_zero() {
            add_scaled_row(&mut out, c, &f.pow_rows[phi + k]);
        }
    }
    Scalar {
        conductor: n,
        coeffs: out,
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if self.conductor == rhs.conductor {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x += y;
                }
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if self.conductor == rhs.conductor {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x -= y;
                }
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn root_name(n: u32, k: usize) -> String {
    match (n, k) {
        (4, 1) => "i".to_string(),
        (_, 1) => format!("z{n}"),
        _ => format!("z{n}^{k}"),
    }
}

impl fmt::Display for Scalar {
    /// Sums of terms `c*zN^k`, with `i` for `zeta_4`, lowest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.simplify();
        let mut first = true;
        for (k, c) in s.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", root_name(s.conductor, k))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), root_name(s.conductor, k))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Parse a rational literal `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Approximate value as a pair of `f64`, for diagnostics only.
pub fn approx_complex(s: &Scalar) -> (f64, f64) {
    let n = s.conductor as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (k, c) in s.coeffs.iter().enumerate() {
        let v = c.to_f64().unwrap_or(0.0);
        let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
        re += v * ang.cos();
        im += v * ang.sin();
    }
    (re, im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(24), 8);
    }

    #[test]
    fn norm_of_one_plus_i() {
        let one = Scalar::one();
        let i = Scalar::i();
        assert_eq!((&one + &i) * (&one - &i), Scalar::from_int(2));
    }

    #[test]
    fn zeta8_squared_is_i() {
        let z8 = Scalar::root_of_unity(8, 1);
        assert_eq!(&z8 * &z8, Scalar::i());
        assert_eq!((&z8 * &z8).to_string(), "i");
    }

    #[test]
    fn inverse_of_i() {
        let i = Scalar::i();
        assert_eq!(Scalar::one() / i, -Scalar::i());
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(Scalar::root_of_unity(4, 1), Scalar::i());
        assert_eq!(Scalar::root_of_unity(2, 1), Scalar::from_int(-1));
        assert!(Scalar::root_of_unity(7, 0).is_one());
        let z = Scalar::root_of_unity(8, 3);
        assert_eq!(z.pow(8), Scalar::one());
        assert_ne!(z.pow(4), Scalar::one());
        assert_eq!(z.to_string(), "z8^3");
        for n in 1..=24u32 {
            let z = Scalar::root_of_unity(n, 1);
            assert!(z.pow(n as i64).is_one());
            for k in 1..n as i64 {
                assert!(!z.pow(k).is_one(), "zeta_{n}^{k} = 1");
            }
        }
    }

    #[test]
    fn sum_of_roots_vanishes() {
        for n in 2..=30u32 {
            let mut s = Scalar::zero();
            for k in 0..n as i64 {
                s += &Scalar::root_of_unity(n, k);
            }
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::from_ratio(-3, 6).to_string(), "-1/2");
        assert_eq!((Scalar::one() + Scalar::i()).to_string(), "1 + i");
        assert_eq!(
            (Scalar::from_ratio(1, 2) - Scalar::i() * Scalar::from_int(3)).to_string(),
            "1/2 - 3*i"
        );
        assert_eq!(Scalar::root_of_unity(3, 1).promote(24).to_string(), "z3");
        assert_eq!(Scalar::root_of_unity(6, 1).to_string(), "1 + z3");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(
            parse_rational("3/6").unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            parse_rational("-4").unwrap(),
            BigRational::from_integer((-4).into())
        );
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational("1/0"), Err(ScalarError::DivisionByZero));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (
            prop::sample::select(vec![1u32, 3, 4, 8, 12]),
            prop::collection::vec((-5i64..=5, 1i64..=4), 8),
        )
            .prop_map(|(n, raw)| {
                let phi = totient(n);
                let coeffs = raw[..phi]
                    .iter()
                    .map(|&(a, b)| BigRational::new(a.into(), b.into()))
                    .collect();
                Scalar::from_coeffs(n, coeffs)
            })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn promotion_commutes(a in arb_scalar(), b in arb_scalar()) {
            let m = a.conductor().lcm(&b.conductor()) * 2;
            let direct = (&a * &b).promote(m);
            let promoted = a.promote(m) * b.promote(m);
            prop_assert_eq!(direct.coeffs(), promoted.coeffs());
        }

        #[test]
        fn simplify_preserves_value(a in arb_scalar()) {
            let s = a.promote(24).simplify();
            prop_assert_eq!(&s, &a);
            prop_assert!(s.conductor() <= a.conductor());
        }
    }
}
