//! A presentation compiled for computation.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::monomial::{Coefficients, Element, GenKey, Monomial};
use crate::presentations::laurent::LaurentModel;
use crate::presentations::spec::{Grading, GeneratorSpec, RelationTemplate, RingPresentation};
use crate::presentations::template::Template;

/// One instantiated relation.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub label: String,
    pub degree: Bidegree,
    pub element: Element,
}

#[derive(Clone, Debug)]
pub struct Ring {
    spec: RingPresentation,
    by_name: BTreeMap<String, u16>,
    laurent: Option<LaurentModel>,
}

impl Ring {
    pub fn new(mut spec: RingPresentation) -> Result<Ring> {
        let ring_name = spec.name.clone();
        let invalid = |msg: String| Error::InvalidCatalog(alloc::format!("{ring_name}: {msg}"));
        spec.generators.sort_by(|a, b| a.name.cmp(&b.name));
        let mut by_name = BTreeMap::new();
        for (i, g) in spec.generators.iter().enumerate() {
            if g.name.is_empty() || !g.name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(invalid(alloc::format!("bad generator name `{}`", g.name)));
            }
            if by_name.insert(g.name.clone(), i as u16).is_some() {
                return Err(invalid(alloc::format!("duplicate generator `{}`", g.name)));
            }
            if spec.grading == Grading::Single
                && (g.degree.q != 0 || g.step.is_some_and(|s| s.q != 0))
            {
                return Err(invalid(alloc::format!("generator `{}` has a weight", g.name)));
            }
        }
        let mut ring = Ring { spec, by_name, laurent: None };
        ring.validate_relations()?;
        if let Some(l) = ring.spec.laurent.clone() {
            let key = |n: &str| ring.key(n, None);
            let letters: Vec<GenKey> = l.letters.iter().map(|n| key(n)).collect::<Result<_>>()?;
            let mut weights = alloc::vec![alloc::vec![0u32; letters.len()]; letters.len()];
            for pw in &l.pair_weights {
                let pos = |n: &str| {
                    l.letters.iter().position(|x| x == n).ok_or_else(|| Error::UnknownGenerator {
                        ring: ring.spec.name.clone(),
                        name: n.into(),
                    })
                };
                let (i, j) = (pos(&pw.a)?, pos(&pw.b)?);
                weights[i][j] = pw.weight;
                weights[j][i] = pw.weight;
            }
            let unit = key(&l.unit)?;
            let socle = key(&l.socle)?;
            let multipliers = l
                .socle_multipliers
                .iter()
                .map(|t| {
                    let e = t.instantiate(&ring, 0)?;
                    match e.into_terms().as_slice() {
                        [(m, c)] if c.is_one() => Ok(m.clone()),
                        _ => Err(Error::InvalidCatalog("socle multipliers must be monomials".into())),
                    }
                })
                .collect::<Result<_>>()?;
            let udeg = ring.spec.generators[unit.gen as usize].degree;
            if udeg.p != 0 || udeg.q <= 0 {
                return Err(invalid("the Laurent unit must have degree (0, q > 0)".into()));
            }
            ring.laurent = Some(LaurentModel { unit, letters, weights, socle, multipliers });
        }
        Ok(ring)
    }

    fn validate_relations(&self) -> Result<()> {
        for r in &self.spec.relations {
            match r {
                RelationTemplate::Element { element, .. } => {
                    for t in &element.terms {
                        for f in &t.monomial {
                            let g = self.generator(&f.gen)?;
                            if g.is_family() != f.k.is_some() {
                                return Err(Error::InvalidCatalog(alloc::format!(
                                    "{}: relation `{}` misuses the parameter of `{}`",
                                    self.spec.name,
                                    r.label(),
                                    f.gen
                                )));
                            }
                        }
                    }
                }
                RelationTemplate::SumIdentification { left, right, .. } => {
                    let (l, rr) = (self.generator(left)?, self.generator(right)?);
                    if !l.is_family() || !rr.is_family() || l.step != rr.step {
                        return Err(Error::InvalidCatalog(alloc::format!(
                            "{}: `{}` needs two families with one step",
                            self.spec.name,
                            r.label()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn spec(&self) -> &RingPresentation {
        &self.spec
    }

    pub fn coefficients(&self) -> Coefficients {
        self.spec.coefficients
    }

    pub fn grading(&self) -> Grading {
        self.spec.grading
    }

    pub fn is_bigraded(&self) -> bool {
        self.spec.grading == Grading::Bigraded
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent.is_some()
    }

    pub(crate) fn laurent(&self) -> Option<&LaurentModel> {
        self.laurent.as_ref()
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.spec.generators
    }

    pub fn generator(&self, name: &str) -> Result<&GeneratorSpec> {
        self.by_name
            .get(name)
            .map(|&i| &self.spec.generators[i as usize])
            .ok_or_else(|| Error::UnknownGenerator { ring: self.spec.name.clone(), name: name.into() })
    }

    pub fn key(&self, name: &str, param: Option<u32>) -> Result<GenKey> {
        let &i = self
            .by_name
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator { ring: self.spec.name.clone(), name: name.into() })?;
        let g = &self.spec.generators[i as usize];
        match (g.is_family(), param) {
            (true, Some(k)) => Ok(GenKey::new(i, k)),
            (false, None) => Ok(GenKey::new(i, 0)),
            _ => Err(Error::UnknownGenerator {
                ring: self.spec.name.clone(),
                name: match param {
                    Some(k) => alloc::format!("{name}({k})"),
                    None => name.into(),
                },
            }),
        }
    }

    pub fn generator_of(&self, key: GenKey) -> &GeneratorSpec {
        &self.spec.generators[key.gen as usize]
    }

    pub fn key_degree(&self, key: GenKey) -> Bidegree {
        self.generator_of(key).degree_at(key.param)
    }

    pub fn degree(&self, m: &Monomial) -> Bidegree {
        m.factors().fold(Bidegree::ZERO, |acc, (&k, &e)| acc + self.key_degree(k) * i64::from(e))
    }

    /// Bidegree of a nonzero homogeneous element.
    pub fn element_degree(&self, x: &Element) -> Result<Option<Bidegree>> {
        let mut deg = None;
        for m in x.monomials() {
            let d = self.degree(m);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::NotHomogeneous { ring: self.spec.name.clone() })
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Rejects bidegrees the ring cannot carry.
    pub fn check_degree(&self, deg: Bidegree) -> Result<()> {
        if deg.p < 0 || (!self.is_bigraded() && deg.q != 0) {
            return Err(Error::BadDegree { ring: self.spec.name.clone(), deg });
        }
        Ok(())
    }

    /// Applies the ring's monomial rules; `None` means the monomial is zero.
    pub fn normalize(&self, m: &Monomial) -> Option<Monomial> {
        match &self.laurent {
            Some(l) => l.normalize(m),
            None => Some(m.clone()),
        }
    }

    pub fn is_member(&self, m: &Monomial) -> bool {
        match &self.laurent {
            Some(l) => l.is_member(m),
            None => m.factors().all(|(_, e)| *e > 0),
        }
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.coefficients())
    }

    pub fn one(&self) -> Element {
        Element::one(self.coefficients())
    }

    pub fn monomial_element(&self, m: Monomial) -> Element {
        Element::monomial(self.coefficients(), m)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let raw = x.mul_raw(y);
        if self.laurent.is_none() {
            return raw;
        }
        raw.map_monomials(|m| self.normalize(m))
    }

    pub fn pow(&self, x: &Element, n: u32) -> Element {
        let mut out = self.one();
        for _ in 0..n {
            out = self.mul(&out, x);
        }
        out
    }

    /// Parses text such as `2·p1^2·sqrt_p2 - B(0)` into an element.
    pub fn parse(&self, text: &str) -> Result<Element> {
        let t = Template::parse(text)?;
        if t.uses_parameter() {
            return Err(Error::InvalidCatalog(alloc::format!("`{text}` still mentions k")));
        }
        t.instantiate(self, 0)
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let e = self.parse(text)?;
        match e.into_terms().as_slice() {
            [(m, c)] if c.is_one() => Ok(m.clone()),
            _ => Err(Error::InvalidCatalog(alloc::format!("`{text}` is not a monomial"))),
        }
    }

    pub fn key_name(&self, key: GenKey) -> String {
        let g = self.generator_of(key);
        if g.is_family() {
            alloc::format!("{}({})", g.name, key.param)
        } else {
            g.name.clone()
        }
    }

    /// `τ^e` first (when present), then the other factors in key order, each
    /// as `name(k)^e`, joined by `·`. The unit is `1`.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let unit = self.laurent.as_ref().map(|l| l.unit);
        let mut factors: Vec<(GenKey, i32)> = m.factors().map(|(&k, &e)| (k, e)).collect();
        factors.sort_by_key(|(k, _)| (Some(*k) != unit, *k));
        let mut out = String::new();
        for (i, (k, e)) in factors.into_iter().enumerate() {
            if i > 0 {
                out.push('·');
            }
            out.push_str(&self.key_name(k));
            if e != 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }

    pub fn render_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in x.terms().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if m.is_one() {
                let _ = write!(out, "{a}");
            } else {
                if !a.is_one() {
                    let _ = write!(out, "{a}·");
                }
                out.push_str(&self.render_monomial(m));
            }
        }
        out
    }

    /// Bound on family parameters inside bidegree `deg`.
    pub fn parameter_bound(&self, deg: Bidegree) -> u32 {
        let b = if self.is_bigraded() { deg.q } else { deg.p };
        u32::try_from(b.max(0)).unwrap_or(u32::MAX)
    }

    /// Every relation instance with family parameters at most `bound`.
    pub fn relation_instances(&self, bound: u32) -> Result<Vec<RelationInstance>> {
        let mut out = Vec::new();
        for r in &self.spec.relations {
            match r {
                RelationTemplate::Element { label, element } => {
                    let top = if element.uses_parameter() { bound } else { 0 };
                    for k in 0..=top {
                        if element.terms.iter().flat_map(|t| &t.monomial).any(|f| {
                            f.k.is_some_and(|a| a.eval(k) < 0 || a.eval(k) > i64::from(bound))
                        }) {
                            continue;
                        }
                        let e = element.instantiate(self, k)?;
                        self.push_instance(&mut out, label, e)?;
                    }
                }
                RelationTemplate::SumIdentification { label, left, right } => {
                    let same = left == right;
                    for s in 0..=2 * bound {
                        let pairs: Vec<(u32, u32)> = (0..=s)
                            .map(|k1| (k1, s - k1))
                            .filter(|&(k1, k2)| k1 <= bound && k2 <= bound && (!same || k1 <= k2))
                            .collect();
                        for w in pairs.windows(2) {
                            let m = |(a, b): (u32, u32)| -> Result<Monomial> {
                                Ok(Monomial::from_factors([
                                    (self.key(left, Some(a))?, 1),
                                    (self.key(right, Some(b))?, 1),
                                ]))
                            };
                            let mut e = self.zero();
                            e.add_term(m(w[0])?, BigInt::one());
                            e.add_term(m(w[1])?, -BigInt::one());
                            self.push_instance(&mut out, label, e)?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn push_instance(&self, out: &mut Vec<RelationInstance>, label: &str, e: Element) -> Result<()> {
        if let Some(degree) = self.element_degree(&e)? {
            out.push(RelationInstance { label: label.into(), degree, element: e });
        }
        Ok(())
    }

    /// All formal generator products of exactly bidegree `deg`, ascending.
    pub fn enumerate_monomials(&self, deg: Bidegree) -> Result<Vec<Monomial>> {
        self.check_degree(deg)?;
        let mut out = match &self.laurent {
            Some(l) => self.enumerate_laurent(l, deg)?,
            None => {
                let instances = self.instances(deg)?;
                let mut out = Vec::new();
                let prune_q = instances.iter().all(|(_, d)| d.q >= 0);
                let mut cur = Vec::new();
                enumerate_products(&instances, 0, deg, (prune_q, true), &mut cur, &mut out);
                out
            }
        };
        out.sort();
        Ok(out)
    }

    fn instances(&self, deg: Bidegree) -> Result<Vec<(GenKey, Bidegree)>> {
        let bound = self.parameter_bound(deg);
        let mut out = Vec::new();
        for (i, g) in self.spec.generators.iter().enumerate() {
            let ks = if g.is_family() { 0..=bound } else { 0..=0 };
            for k in ks {
                let d = g.degree_at(k);
                if d.p <= 0 {
                    return Err(Error::Unbounded {
                        ring: self.spec.name.clone(),
                        generator: g.name.clone(),
                    });
                }
                if d.p <= deg.p && (d.q <= deg.q || d.q < 0) {
                    out.push((GenKey::new(i as u16, k), d));
                }
            }
        }
        Ok(out)
    }

    fn enumerate_laurent(&self, l: &LaurentModel, deg: Bidegree) -> Result<Vec<Monomial>> {
        let unit_q = self.key_degree(l.unit).q;
        let letters: Vec<(GenKey, Bidegree)> =
            l.letters.iter().map(|&k| (k, self.key_degree(k))).collect();
        if let Some((k, _)) = letters.iter().find(|(_, d)| d.p <= 0) {
            return Err(Error::Unbounded {
                ring: self.spec.name.clone(),
                generator: self.key_name(*k),
            });
        }
        let mut out = Vec::new();
        let mut words = Vec::new();
        let mut cur = Vec::new();
        // Letter words of the right p; the weight is then fixed by τ.
        enumerate_products(&letters, 0, Bidegree::new(deg.p, 0), (false, false), &mut cur, &mut words);
        for w in words {
            let rest = deg.q - self.degree(&w).q;
            if rest % unit_q != 0 {
                continue;
            }
            let e = rest / unit_q;
            let counts = l.letter_counts(&w).expect("letter words have nonnegative exponents");
            if e >= -i64::from(l.deficit(&counts)) {
                let mut m = w;
                m.mul_factor(l.unit, e as i32);
                out.push(m);
            }
        }
        let socle_deg = self.key_degree(l.socle);
        let remaining = deg - socle_deg;
        if remaining.p >= 0 {
            let mults: Vec<(Monomial, Bidegree)> =
                l.multipliers.iter().map(|m| (m.clone(), self.degree(m))).collect();
            if mults.iter().any(|(_, d)| d.p <= 0) {
                return Err(Error::Unbounded {
                    ring: self.spec.name.clone(),
                    generator: self.key_name(l.socle),
                });
            }
            let mut acc = Vec::new();
            socle_products(&mults, 0, remaining, Monomial::generator(l.socle), &mut acc);
            out.extend(acc);
        }
        Ok(out)
    }
}

/// `prune_q` cuts branches once the weight overshoots (valid when every
/// weight is nonnegative); `match_q` demands an exact weight at the leaves.
fn enumerate_products(
    gens: &[(GenKey, Bidegree)],
    i: usize,
    remaining: Bidegree,
    (prune_q, match_q): (bool, bool),
    cur: &mut Vec<(GenKey, i32)>,
    out: &mut Vec<Monomial>,
) {
    if i == gens.len() {
        if remaining.p == 0 && (remaining.q == 0 || !match_q) {
            out.push(Monomial::from_factors(cur.iter().copied()));
        }
        return;
    }
    let (key, d) = gens[i];
    let mut e = 0i32;
    let mut rem = remaining;
    loop {
        if rem.p < 0 || (prune_q && rem.q < 0) {
            break;
        }
        if e > 0 {
            cur.push((key, e));
        }
        enumerate_products(gens, i + 1, rem, (prune_q, match_q), cur, out);
        if e > 0 {
            cur.pop();
        }
        e += 1;
        rem = rem - d;
    }
}

fn socle_products(
    mults: &[(Monomial, Bidegree)],
    i: usize,
    remaining: Bidegree,
    cur: Monomial,
    out: &mut Vec<Monomial>,
) {
    if i == mults.len() {
        if remaining == Bidegree::ZERO {
            out.push(cur);
        }
        return;
    }
    let (m, d) = &mults[i];
    let mut rem = remaining;
    let mut acc = cur;
    while rem.p >= 0 {
        socle_products(mults, i + 1, rem, acc.clone(), out);
        acc = acc.mul(m);
        rem = rem - *d;
    }
}
