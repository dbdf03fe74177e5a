//! Membership and multiplication rules of the Laurent model.

use alloc::vec::Vec;

use crate::monomial::{GenKey, Monomial};

/// Largest total pair weight over all ways of pairing off the multiset
/// `{w2 × a, w3 × b, w4 × c}` with the standard weights
/// `w2²:2, w3²:1, w4²:2, w2w3:1, w2w4:1, w3w4:1`.
pub fn deficit(a: u32, b: u32, c: u32) -> u32 {
    max_pairing(&STANDARD_WEIGHTS, &[a, b, c])
}

const STANDARD_WEIGHTS: [[u32; 3]; 3] = [[2, 1, 1], [1, 1, 1], [1, 1, 2]];

/// Exhaustive over the number of mixed pairs; same-letter pairs are then
/// taken greedily, which is optimal because every weight is nonnegative.
pub fn max_pairing<W: AsRef<[u32]>>(weights: &[W], counts: &[u32]) -> u32 {
    let n = counts.len();
    let mixed: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut remaining = counts.to_vec();
    fn go<W: AsRef<[u32]>>(
        weights: &[W],
        mixed: &[(usize, usize)],
        remaining: &mut [u32],
    ) -> u32 {
        let Some((&(i, j), rest)) = mixed.split_first() else {
            return remaining
                .iter()
                .enumerate()
                .map(|(i, &r)| (r / 2) * weights[i].as_ref()[i])
                .sum();
        };
        let w = weights[i].as_ref()[j];
        let top = remaining[i].min(remaining[j]);
        let mut best = 0;
        for x in 0..=top {
            remaining[i] -= x;
            remaining[j] -= x;
            best = best.max(x * w + go(weights, rest, remaining));
            remaining[i] += x;
            remaining[j] += x;
        }
        best
    }
    go(weights, &mixed, &mut remaining)
}

/// Compiled form of a `LaurentSpec` in terms of generator keys.
#[derive(Clone, Debug)]
pub(crate) struct LaurentModel {
    pub unit: GenKey,
    pub letters: Vec<GenKey>,
    pub weights: Vec<Vec<u32>>,
    pub socle: GenKey,
    pub multipliers: Vec<Monomial>,
}

impl LaurentModel {
    pub fn letter_counts(&self, m: &Monomial) -> Option<Vec<u32>> {
        self.letters.iter().map(|&l| u32::try_from(m.exponent(l)).ok()).collect()
    }

    pub fn deficit(&self, counts: &[u32]) -> u32 {
        max_pairing(&self.weights, counts)
    }

    fn only_known_keys(&self, m: &Monomial) -> bool {
        m.factors()
            .all(|(k, _)| *k == self.unit || *k == self.socle || self.letters.contains(k))
    }

    /// Whether `m` is one of the spanning monomials of the model.
    pub fn is_member(&self, m: &Monomial) -> bool {
        if !self.only_known_keys(m) {
            return false;
        }
        match m.exponent(self.socle) {
            0 => match self.letter_counts(m) {
                Some(c) => i64::from(m.exponent(self.unit)) >= -i64::from(self.deficit(&c)),
                None => false,
            },
            1 => self.is_multiplier_product(&m.div(&Monomial::generator(self.socle))),
            _ => false,
        }
    }

    pub fn is_multiplier_product(&self, m: &Monomial) -> bool {
        if m.is_one() {
            return true;
        }
        if m.factors().any(|(k, e)| self.letters.contains(k) && *e < 0) {
            return false;
        }
        self.multipliers.iter().any(|mu| {
            let rest = m.div(mu);
            rest.factors().all(|(k, e)| !self.letters.contains(k) || *e >= 0)
                && self.is_multiplier_product(&rest)
        })
    }

    /// Applies the annihilation rules of the socle class. Monomials without
    /// the socle are returned untouched.
    pub fn normalize(&self, m: &Monomial) -> Option<Monomial> {
        match m.exponent(self.socle) {
            0 => Some(m.clone()),
            1 => {
                let rest = m.div(&Monomial::generator(self.socle));
                self.is_multiplier_product(&rest).then(|| m.clone())
            }
            e if e >= 2 => None,
            _ => Some(m.clone()),
        }
    }
}
