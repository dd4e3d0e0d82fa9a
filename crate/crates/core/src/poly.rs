//! Noncommutative polynomials over the free algebra and their textual grammar.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := scalar | generator | '(' expr ')'
//! scalar := rational | 'i' | 'z' nat ('^' int)?
//! ```
//!
//! Generator names take precedence over the scalar literals `i` and `zN`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalars::{parse_rational, Scalar};

/// A word in the generators, as a sequence of generator indices.
pub type Word = Vec<u8>;

/// Weighted degree of a word.
pub fn word_degree(w: &[u8], degrees: &[u32]) -> u32 {
    w.iter().map(|&x| degrees[x as usize]).sum()
}

/// The monomial order: weighted degree, then length, then lexicographic with
/// generators ordered as listed.
pub fn cmp_words(a: &[u8], b: &[u8], degrees: &[u32]) -> Ordering {
    word_degree(a, degrees)
        .cmp(&word_degree(b, degrees))
        .then(a.len().cmp(&b.len()))
        .then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// An element of the free algebra: words with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::monomial(Vec::new(), c)
    }

    pub fn one() -> Self {
        NCPoly::constant(Scalar::one())
    }

    pub fn generator(x: u8) -> Self {
        NCPoly::monomial(vec![x], Scalar::one())
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        for (w, c) in &o.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, o: &NCPoly) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                p.add_term(w, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The common weighted degree of all words, or `None` if inhomogeneous.
    /// The zero polynomial reports `Some(0)`.
    pub fn homogeneous_degree(&self, degrees: &[u32]) -> Option<u32> {
        let mut it = self.terms.keys().map(|w| word_degree(w, degrees));
        let first = match it.next() {
            Some(d) => d,
            None => return Some(0),
        };
        it.all(|d| d == first).then_some(first)
    }

    /// Terms sorted from largest to smallest word.
    pub fn sorted_terms(&self, degrees: &[u32]) -> Vec<(&Word, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| cmp_words(b.0, a.0, degrees));
        v
    }

    pub fn leading(&self, degrees: &[u32]) -> Option<(&Word, &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| cmp_words(a.0, b.0, degrees))
    }

    /// Rescale so the leading coefficient is 1; returns the removed factor.
    pub fn normalized(&self, degrees: &[u32]) -> (NCPoly, Scalar) {
        match self.leading(degrees) {
            None => (NCPoly::zero(), Scalar::zero()),
            Some((_, c)) => {
                let c = c.clone();
                (self.scale(&c.inv().unwrap()), c)
            }
        }
    }

    /// Promote all coefficients to conductor `n`.
    pub fn promote(&self, n: u32) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.promote(n)))
                .collect(),
        }
    }

    /// Largest conductor appearing among coefficients' lcm.
    pub fn conductor(&self) -> u32 {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(1u32, |acc, c| acc.lcm(&c.conductor()))
    }

    /// Substitute each generator by a polynomial.
    pub fn substitute(&self, images: &[NCPoly]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut t = NCPoly::constant(c.clone());
            for &x in w {
                t = t.mul(&images[x as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String], degrees: &'a [u32]) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            names,
            degrees,
        }
    }
}

/// Print a word compressing runs: `u^2*v`.
pub fn format_word(w: &[u8], names: &[String]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = &names[w[i] as usize];
        if j - i == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{}^{}", name, j - i));
        }
        i = j;
    }
    parts.join("*")
}

/// Format a coefficient-word pair for position `first`; returns the text including its sign separator.
pub fn format_term(c: &Scalar, body: Option<String>, first: bool) -> String {
    let (neg, abs) = if c.is_negative_monomial() {
        (true, -c)
    } else {
        (false, c.clone())
    };
    let sep = match (first, neg) {
        (true, true) => "-".to_string(),
        (true, false) => String::new(),
        (false, true) => " - ".to_string(),
        (false, false) => " + ".to_string(),
    };
    let coeff = abs.to_string();
    let text = match body {
        None => coeff,
        Some(b) if abs.is_one() => b,
        Some(b) if abs.term_count() > 1 => format!("({coeff})*{b}"),
        Some(b) => format!("{coeff}*{b}"),
    };
    format!("{sep}{text}")
}

pub struct PolyDisplay<'a> {
    poly: &'a NCPoly,
    names: &'a [String],
    degrees: &'a [u32],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let terms = self.poly.sorted_terms(self.degrees);
        let single = terms.len() == 1;
        for (k, (w, c)) in terms.into_iter().enumerate() {
            let body = if w.is_empty() {
                None
            } else {
                Some(format_word(w, self.names))
            };
            let text = if body.is_none() && !single && c.term_count() > 1 {
                let (neg, abs) = if c.is_negative_monomial() {
                    (true, -c)
                } else {
                    (false, c.clone())
                };
                let sep = if k == 0 {
                    if neg {
                        "-"
                    } else {
                        ""
                    }
                } else if neg {
                    " - "
                } else {
                    " + "
                };
                format!("{sep}({abs})")
            } else {
                format_term(c, body, k == 0)
            };
            write!(f, "{text}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(s[start..i].to_string())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*^()/".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError {
                offset: i,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<NCPoly, ParseError> {
        let mut acc = if self.eat('-') {
            self.term()?.scale(&Scalar::from_int(-1))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                let v = n
                    .parse::<u32>()
                    .or_else(|_| self.err("exponent too large"))?;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected a natural number"),
        }
    }

    fn factor(&mut self) -> Result<NCPoly, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.nat()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NCPoly, ParseError> {
        let start = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut text = n;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) => {
                            self.pos += 1;
                            text = format!("{text}/{d}");
                        }
                        _ => return self.err("expected denominator"),
                    }
                }
                let q = parse_rational(&text).map_err(|e| ParseError {
                    offset: start,
                    message: e.to_string(),
                })?;
                Ok(NCPoly::constant(Scalar::from_rational(q)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(k) = self.names.iter().position(|n| *n == name) {
                    return Ok(NCPoly::generator(k as u8));
                }
                if name == "i" {
                    return Ok(NCPoly::constant(Scalar::i()));
                }
                if let Some(rest) = name.strip_prefix('z') {
                    if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                        let n: u32 =
                            rest.parse()
                                .ok()
                                .filter(|&n| n > 0)
                                .ok_or_else(|| ParseError {
                                    offset: start,
                                    message: "invalid root of unity order".into(),
                                })?;
                        let mut k: i64 = 1;
                        if self.peek() == Some(&Tok::Sym('^')) {
                            self.pos += 1;
                            let neg = self.eat('-');
                            k = self.nat()? as i64;
                            if neg {
                                k = -k;
                            }
                        }
                        return Ok(NCPoly::constant(Scalar::root_of_unity(n, k)));
                    }
                }
                Err(ParseError {
                    offset: start,
                    message: format!("unknown identifier `{name}`"),
                })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {}", tok_text(&t))),
            None => self.err("unexpected end of input"),
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("`{n}`"),
        Tok::Ident(n) => format!("`{n}`"),
        Tok::Sym(c) => format!("`{c}`"),
    }
}

/// Parse an expression over the named generators.
pub fn parse_poly(s: &str, names: &[String]) -> Result<NCPoly, ParseError> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        len: s.len(),
        names,
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err(format!("unexpected token {}", tok_text(p.peek().unwrap())));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_quantum_plane_relation() {
        let n = names(&["u", "v"]);
        let p = parse_poly("v*u - i*u*v", &n).unwrap();
        assert_eq!(p.coeff(&[1, 0]), Scalar::one());
        assert_eq!(p.coeff(&[0, 1]), -Scalar::i());
        assert_eq!(p.len(), 2);
        assert_eq!(p.homogeneous_degree(&[1, 1]), Some(2));
    }

    #[test]
    fn syntax_error_offsets() {
        let n = names(&["x"]);
        assert_eq!(parse_poly("^2x", &n).unwrap_err().offset, 0);
        assert_eq!(parse_poly("x*", &n).unwrap_err().offset, 2);
        assert_eq!(parse_poly("x + q", &n).unwrap_err().offset, 4);
        assert!(parse_poly("(x", &n).is_err());
        assert!(parse_poly("x $", &n).is_err());
    }

    #[test]
    fn powers_and_parentheses() {
        let n = names(&["u", "v"]);
        let p = parse_poly("u*v*(u^2 - v^2)", &n).unwrap();
        let q = parse_poly("u*v*u*u - u*v*v*v", &n).unwrap();
        assert_eq!(p, q);
        let r = parse_poly("(u + v)^2", &n).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(parse_poly("z8^-1*z8", &n).unwrap(), NCPoly::one());
        assert_eq!(parse_poly("-1/2*u + 1/2*u", &n).unwrap(), NCPoly::zero());
    }

    #[test]
    fn generator_names_shadow_literals() {
        let n = names(&["x", "y", "z"]);
        let p = parse_poly("z*x + x*z", &n).unwrap();
        assert_eq!(p.coeff(&[2, 0]), Scalar::one());
        let q = parse_poly("z3*x", &n).unwrap();
        assert_eq!(q.coeff(&[0]), Scalar::root_of_unity(3, 1));
    }

    #[test]
    fn printing() {
        let n = names(&["u", "v"]);
        let d = [1, 1];
        let p = parse_poly("u*v*(u^2 - v^2)", &n).unwrap();
        assert_eq!(p.display(&n, &d).to_string(), "-u*v^3 + u*v*u^2");
        let q = parse_poly("(1+i)*u - 1/2*v + 3", &n).unwrap();
        assert_eq!(q.display(&n, &d).to_string(), "-1/2*v + (1 + i)*u + 3");
        assert_eq!(
            NCPoly::constant(Scalar::one() + Scalar::i())
                .display(&n, &d)
                .to_string(),
            "1 + i"
        );
        assert_eq!(NCPoly::zero().display(&n, &d).to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = NCPoly> {
        let coeff = (-3i64..=3, 1i64..=3, 0i64..8)
            .prop_map(|(a, b, k)| Scalar::from_ratio(a, b) * Scalar::root_of_unity(8, k));
        prop::collection::vec((prop::collection::vec(0u8..2, 0..4), coeff), 0..5)
            .prop_map(NCPoly::from_terms)
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_poly()) {
            let n = names(&["u", "v"]);
            let text = p.display(&n, &[1, 1]).to_string();
            let q = parse_poly(&text, &n).unwrap();
            prop_assert_eq!(&q, &p);
            let again = parse_poly(&q.display(&n, &[1, 1]).to_string(), &n).unwrap();
            prop_assert_eq!(again, q);
        }
    }
}
