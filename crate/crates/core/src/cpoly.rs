//! Commutative polynomials over cyclotomic scalars, used to carry products in a
//! polynomial-type fixed ring past the truncation degree.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::poly::format_term;
use crate::scalars::Scalar;

/// A polynomial in `nvars` commuting variables; exponent vectors map to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl CPoly {
    pub fn zero(nvars: usize) -> Self {
        CPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = CPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        CPoly::constant(nvars, Scalar::one())
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        let mut p = CPoly::zero(nvars);
        p.add_term(e, Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &CPoly) -> CPoly {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> CPoly {
        let mut out = CPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, o: &CPoly) -> CPoly {
        let mut out = CPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            for (f, d) in &o.terms {
                let g = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, c * d);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> CPoly {
        let mut out = CPoly::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Leading term under lexicographic order on exponent vectors.
    pub fn leading(&self) -> Option<(&Vec<u32>, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn divide(&self, d: &CPoly) -> Option<CPoly> {
        let (de, dc) = d.leading()?;
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut q = CPoly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(de).map(|(a, b)| a - b).collect();
            let c = rc * &dinv;
            let mut t = CPoly::zero(self.nvars);
            t.add_term(e, c);
            rem = rem.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    pub fn divides(&self, o: &CPoly) -> bool {
        o.divide(self).is_some()
    }

    /// Whether `o` is a nonzero scalar multiple of `self`.
    pub fn proportional(&self, o: &CPoly) -> bool {
        if self.is_zero() || o.is_zero() || self.terms.len() != o.terms.len() {
            return false;
        }
        let (e, c) = self.leading().unwrap();
        let Some(oc) = o.terms.get(e) else {
            return false;
        };
        let r = oc / c;
        self.scale(&r) == *o
    }

    /// Rescaled so the leading coefficient is 1.
    pub fn monic(&self) -> CPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }

    /// Text with the given variable names, largest exponent vector first.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut parts = Vec::new();
            for (v, &p) in e.iter().enumerate() {
                match p.cmp(&1) {
                    Ordering::Less => {}
                    Ordering::Equal => parts.push(names[v].clone()),
                    Ordering::Greater => parts.push(format!("{}^{p}", names[v])),
                }
            }
            let body = if parts.is_empty() {
                None
            } else {
                Some(parts.join("*"))
            };
            out.push_str(&format_term(c, body, k == 0));
        }
        out
    }
}
