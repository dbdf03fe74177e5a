//! Symbolic elements with one family parameter `k`.
//!
//! Relation templates and generator images are written in a small text
//! syntax, e.g. `A(k)^3 - d3·A(3k+1)` or `τ^(k-1)·w3·w4`, and stored in the
//! catalog in structured form. Instantiating at a concrete `k` gives an
//! [`Element`] of a ring.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{Element, Monomial};
use crate::presentations::Ring;

/// `scale·k + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub scale: i64,
    pub offset: i64,
}

impl Affine {
    pub const ONE: Affine = Affine { scale: 0, offset: 1 };

    pub const fn constant(c: i64) -> Self {
        Affine { scale: 0, offset: c }
    }

    pub fn eval(self, k: u32) -> i64 {
        self.scale * i64::from(k) + self.offset
    }

    pub fn is_constant(self) -> bool {
        self.scale == 0
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.scale, self.offset) {
            (0, c) => write!(f, "{c}"),
            (s, c) => {
                match s {
                    1 => write!(f, "k")?,
                    -1 => write!(f, "-k")?,
                    _ => write!(f, "{s}k")?,
                }
                match c {
                    0 => Ok(()),
                    c if c > 0 => write!(f, "+{c}"),
                    c => write!(f, "{c}"),
                }
            }
        }
    }
}

impl FromStr for Affine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCatalog(alloc::format!("bad parameter expression `{s}`"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut scale = 0i64;
        let mut offset = 0i64;
        // Split into signed summands.
        let mut parts: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let bytes = t.as_bytes();
        let mut neg = false;
        for i in 0..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > 0) {
                let piece = &t[start..i];
                let (n, body) = match piece.strip_prefix('-') {
                    Some(b) => (!neg, b),
                    None => (neg, piece.strip_prefix('+').unwrap_or(piece)),
                };
                parts.push((n, body));
                start = i;
                neg = false;
            }
        }
        for (negative, body) in parts {
            if body.is_empty() {
                return Err(bad());
            }
            let sign = if negative { -1 } else { 1 };
            if let Some(coef) = body.strip_suffix('k') {
                let c = if coef.is_empty() { 1 } else { coef.parse::<i64>().map_err(|_| bad())? };
                scale += sign * c;
            } else {
                offset += sign * body.parse::<i64>().map_err(|_| bad())?;
            }
        }
        Ok(Affine { scale, offset })
    }
}

impl Serialize for Affine {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        if self.is_constant() {
            s.serialize_i64(self.offset)
        } else {
            s.collect_str(self)
        }
    }
}

impl<'de> Deserialize<'de> for Affine {
    fn deserialize<D: Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(c) => Ok(Affine::constant(c)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

fn is_one(a: &Affine) -> bool {
    *a == Affine::ONE
}

fn one() -> Affine {
    Affine::ONE
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateFactor {
    pub gen: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Affine>,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub exp: Affine,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateTerm {
    pub coefficient: i64,
    pub monomial: Vec<TemplateFactor>,
}

/// A sum of terms, possibly depending on `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Template {
    pub terms: Vec<TemplateTerm>,
}

impl Template {
    pub fn parse(s: &str) -> Result<Template> {
        Parser { src: s, chars: s.char_indices().collect(), pos: 0 }.element()
    }

    pub fn uses_parameter(&self) -> bool {
        self.terms.iter().flat_map(|t| &t.monomial).any(|f| {
            f.k.is_some_and(|k| !k.is_constant()) || !f.exp.is_constant()
        })
    }

    /// Every generator name mentioned.
    pub fn generators(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().flat_map(|t| &t.monomial).map(|f| f.gen.as_str())
    }

    pub fn instantiate(&self, ring: &Ring, k: u32) -> Result<Element> {
        let mut out = Element::zero(ring.coefficients());
        for term in &self.terms {
            let mut m = Monomial::one();
            for f in &term.monomial {
                let param = match f.k {
                    None => None,
                    Some(a) => {
                        let v = a.eval(k);
                        let v = u32::try_from(v).map_err(|_| {
                            Error::InvalidCatalog(alloc::format!(
                                "parameter of {} evaluates to {v} at k={k}",
                                f.gen
                            ))
                        })?;
                        Some(v)
                    }
                };
                let key = ring.key(&f.gen, param)?;
                let e = i32::try_from(f.exp.eval(k))
                    .map_err(|_| Error::InvalidCatalog("exponent overflow".to_string()))?;
                m.mul_factor(key, e);
            }
            if let Some(m) = ring.normalize(&m) {
                out.add_term(m, BigInt::from(term.coefficient));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let c = t.coefficient;
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            if t.monomial.is_empty() {
                write!(f, "{a}")?;
                continue;
            }
            if a != 1 {
                write!(f, "{a}·")?;
            }
            for (j, fac) in t.monomial.iter().enumerate() {
                if j > 0 {
                    write!(f, "·")?;
                }
                write!(f, "{}", fac.gen)?;
                if let Some(k) = fac.k {
                    write!(f, "({k})")?;
                }
                if fac.exp != Affine::ONE {
                    if fac.exp.is_constant() {
                        write!(f, "^{}", fac.exp)?;
                    } else {
                        write!(f, "^({})", fac.exp)?;
                    }
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::InvalidCatalog(alloc::format!("cannot parse `{}`: {what}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn integer(&mut self) -> Option<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        s.parse().ok()
    }

    fn element(mut self) -> Result<Template> {
        let mut terms = Vec::new();
        let mut sign = 1i64;
        if self.peek() == Some('-') {
            self.bump();
            sign = -1;
        }
        loop {
            let t = self.term(sign)?;
            if !(t.coefficient == 0) {
                terms.push(t);
            }
            match self.bump() {
                None => break,
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
        }
        Ok(Template { terms })
    }

    fn term(&mut self, sign: i64) -> Result<TemplateTerm> {
        let mut coefficient = sign;
        let mut monomial = Vec::new();
        if let Some(c) = self.integer() {
            coefficient *= c;
            match self.peek() {
                Some('*') | Some('·') => {
                    self.bump();
                }
                _ => return Ok(TemplateTerm { coefficient, monomial }),
            }
        }
        loop {
            monomial.push(self.factor()?);
            match self.peek() {
                Some('*') | Some('·') => {
                    self.bump();
                }
                _ => break,
            }
        }
        Ok(TemplateTerm { coefficient, monomial })
    }

    fn factor(&mut self) -> Result<TemplateFactor> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_alphanumeric() || c.1 == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a generator name"));
        }
        let gen: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        let mut k = None;
        if self.chars.get(self.pos).is_some_and(|c| c.1 == '(') {
            self.pos += 1;
            k = Some(self.parenthesized()?);
        }
        let mut exp = Affine::ONE;
        if self.peek() == Some('^') {
            self.bump();
            if self.peek() == Some('(') {
                self.bump();
                exp = self.parenthesized()?;
            } else {
                let neg = if self.peek() == Some('-') {
                    self.bump();
                    true
                } else {
                    false
                };
                let e = self.integer().ok_or_else(|| self.err("expected an exponent"))?;
                exp = Affine::constant(if neg { -e } else { e });
            }
        }
        Ok(TemplateFactor { gen, k, exp })
    }

    fn parenthesized(&mut self) -> Result<Affine> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1 != ')') {
            self.pos += 1;
        }
        if self.pos >= self.chars.len() {
            return Err(self.err("unclosed parenthesis"));
        }
        let body: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        self.pos += 1;
        body.parse()
    }
}
