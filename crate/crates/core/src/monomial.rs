//! Monomials over generator instances and elements with exact coefficients.
//!
//! A [`Monomial`] does not know its ring; generator instances are indices into
//! the owning ring's (name-sorted) generator list. Rendering and degree
//! computations therefore go through [`crate::presentations::Ring`].

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coefficients {
    Integers,
    Mod2,
}

/// A generator instance: generator index plus family parameter (0 for atomic
/// generators).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenKey {
    pub gen: u16,
    pub param: u32,
}

impl GenKey {
    pub const fn new(gen: u16, param: u32) -> Self {
        GenKey { gen, param }
    }
}

/// Exponent map with nonzero entries. Only a Laurent-type generator (the
/// weight-one unit of the mod 2 motivic ring) may carry negative exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: BTreeMap<GenKey, i32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_factors<I: IntoIterator<Item = (GenKey, i32)>>(factors: I) -> Self {
        let mut m = Monomial::one();
        for (k, e) in factors {
            m.mul_factor(k, e);
        }
        m
    }

    pub fn generator(key: GenKey) -> Self {
        Self::from_factors([(key, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, key: GenKey) -> i32 {
        self.exps.get(&key).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> btree_map::Iter<'_, GenKey, i32> {
        self.exps.iter()
    }

    /// Total number of factors counted with multiplicity (positive exponents only).
    pub fn length(&self) -> u32 {
        self.exps.values().filter(|e| **e > 0).map(|&e| e as u32).sum()
    }

    pub fn mul_factor(&mut self, key: GenKey, e: i32) {
        if e == 0 {
            return;
        }
        match self.exps.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(e);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += e;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&k, &e) in &other.exps {
            out.mul_factor(k, e);
        }
        out
    }

    pub fn pow(&self, n: i32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|(&k, &e)| (k, e * n)).filter(|(_, e)| *e != 0).collect() }
    }

    /// `self / other` as exponent subtraction (may produce negative exponents).
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.pow(-1))
    }

    /// True if every exponent of `other` is at most the matching exponent here.
    pub fn is_divisible_by(&self, other: &Monomial) -> bool {
        other.exps.iter().all(|(k, e)| self.exponent(*k) >= *e)
    }

    /// The positive part, one key per unit of exponent, in key order.
    fn expanded(&self) -> impl Iterator<Item = GenKey> + '_ {
        self.exps
            .iter()
            .filter(|(_, e)| **e > 0)
            .flat_map(|(&k, &e)| core::iter::repeat_n(k, e as usize))
    }
}

/// Lexicographic on the factor sequence `(generator, parameter)` expanded with
/// multiplicity, so `A(0)·A(2) < A(1)·A(1)` and `d4 < y2^2`. Ties (only
/// possible with negative exponents) fall back to the raw exponent map.
///
/// Only meaningful between monomials of one bidegree; graded pieces never
/// compare across degrees.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.expanded();
        let mut b = other.expanded();
        loop {
            match (a.next(), b.next()) {
                (None, None) => break,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        self.exps.iter().cmp(other.exps.iter())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite formal sum of monomials with nonzero coefficients. Over `Z/2` every
/// stored coefficient is `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    coefficients: Coefficients,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Element {
    pub fn zero(coefficients: Coefficients) -> Self {
        Element { coefficients, terms: BTreeMap::new() }
    }

    pub fn one(coefficients: Coefficients) -> Self {
        Self::monomial(coefficients, Monomial::one())
    }

    pub fn monomial(coefficients: Coefficients, m: Monomial) -> Self {
        Self::term(coefficients, m, BigInt::one())
    }

    pub fn term(coefficients: Coefficients, m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut e = Element::zero(coefficients);
        e.add_term(m, c.into());
        e
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, BigInt> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> btree_map::Keys<'_, Monomial, BigInt> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coefficients {
            Coefficients::Integers => {
                let slot = self.terms.entry(m);
                match slot {
                    btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            Coefficients::Mod2 => {
                if c.is_even() {
                    return;
                }
                if self.terms.remove(&m).is_none() {
                    self.terms.insert(m, BigInt::one());
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        let mut out = Element::zero(self.coefficients);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Element {
        let mut out = Element::zero(self.coefficients);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Product in the free commutative (Laurent) monoid algebra. Rings with
    /// extra monomial rules post-process through `Ring::normalize`.
    pub fn mul_raw(&self, other: &Element) -> Element {
        let mut out = Element::zero(self.coefficients);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Same terms viewed over `Z/2`.
    pub fn reduce_mod2(&self) -> Element {
        let mut out = Element::zero(Coefficients::Mod2);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Retains only the terms whose monomial passes `keep`, rewriting each.
    pub fn map_monomials<F>(&self, mut f: F) -> Element
    where
        F: FnMut(&Monomial) -> Option<Monomial>,
    {
        let mut out = Element::zero(self.coefficients);
        for (m, c) in &self.terms {
            if let Some(m2) = f(m) {
                out.add_term(m2, c.clone());
            }
        }
        out
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigInt)> {
        self.terms.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A0: GenKey = GenKey::new(0, 0);
    const A1: GenKey = GenKey::new(0, 1);
    const A2: GenKey = GenKey::new(0, 2);
    const D4: GenKey = GenKey::new(3, 0);
    const Y2: GenKey = GenKey::new(5, 0);

    #[test]
    fn ordering_concentrates_parameters_last() {
        let a0a2 = Monomial::from_factors([(A0, 1), (A2, 1)]);
        let a1a1 = Monomial::from_factors([(A1, 2)]);
        assert!(a0a2 < a1a1);
        let a0a0a2 = Monomial::from_factors([(A0, 2), (A2, 1)]);
        let a0a1a1 = Monomial::from_factors([(A0, 1), (A1, 2)]);
        assert!(a0a0a2 < a0a1a1);
        let d4 = Monomial::generator(D4);
        let y2sq = Monomial::from_factors([(Y2, 2)]);
        assert!(d4 < y2sq);
    }

    #[test]
    fn zero_exponents_vanish() {
        let m = Monomial::from_factors([(A0, 2), (A0, -2)]);
        assert!(m.is_one());
        assert_eq!(Monomial::from_factors([(A1, 3)]).div(&Monomial::generator(A1)).exponent(A1), 2);
    }

    #[test]
    fn mod2_coefficients_collapse() {
        let m = Monomial::generator(A0);
        let mut e = Element::zero(Coefficients::Mod2);
        e.add_term(m.clone(), BigInt::from(3));
        assert_eq!(e.coefficient(&m), BigInt::one());
        e.add_term(m.clone(), BigInt::from(1));
        assert!(e.is_zero());
        e.add_term(m, BigInt::from(2));
        assert!(e.is_zero());
    }

    #[test]
    fn integer_arithmetic() {
        let x = Element::monomial(Coefficients::Integers, Monomial::generator(A0));
        let y = Element::term(Coefficients::Integers, Monomial::generator(D4), -2);
        let s = x.add(&y);
        let p = s.mul_raw(&s);
        assert_eq!(p.coefficient(&Monomial::from_factors([(A0, 1), (D4, 1)])), BigInt::from(-4));
        assert_eq!(p.coefficient(&Monomial::from_factors([(D4, 2)])), BigInt::from(4));
        assert!(s.sub(&s).is_zero());
    }
}
