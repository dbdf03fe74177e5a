//! Graded pieces as explicit abelian groups.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::linalg::{
    cokernel_structure, f2_row_reduce, AbelianGroupStructure, BitMatrix, BitVec, EchelonLattice,
    IntegerMatrix,
};
use crate::monomial::{Coefficients, Element, Monomial};
use crate::presentations::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry {
    pub monomial: Monomial,
    /// `None` for a free summand.
    pub order: Option<BigInt>,
    column: usize,
}

/// `H^{p,q}` of one ring as `Z^r + (Z/2)^s` (or a `Z/2` vector space) with a
/// monomial basis. Basis monomials are the smallest representatives in the
/// monomial order: elimination runs from the largest monomial down.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    ring: String,
    degree: Bidegree,
    coefficients: Coefficients,
    /// Spanning monomials, descending.
    columns: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    lattice: EchelonLattice,
    basis: Vec<BasisEntry>,
    group: AbelianGroupStructure,
    relation_rows: usize,
}

impl GradedPiece {
    pub fn ring(&self) -> &str {
        &self.ring
    }

    pub fn degree(&self) -> Bidegree {
        self.degree
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn group(&self) -> &AbelianGroupStructure {
        &self.group
    }

    pub fn basis(&self) -> &[BasisEntry] {
        &self.basis
    }

    pub fn basis_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|b| &b.monomial)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Spanning monomials in ascending order.
    pub fn spanning(&self) -> impl Iterator<Item = &Monomial> {
        self.columns.iter().rev()
    }

    pub fn relation_rows(&self) -> usize {
        self.relation_rows
    }

    /// Indices of basis entries with finite order.
    pub fn torsion_indices(&self) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].order.is_some()).collect()
    }

    pub fn free_indices(&self) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].order.is_none()).collect()
    }

    fn column_vector(&self, x: &Element) -> Result<Vec<BigInt>> {
        let mut v = alloc::vec![BigInt::zero(); self.columns.len()];
        for (m, c) in x.terms() {
            let &i = self.index.get(m).ok_or_else(|| {
                Error::Inconsistent(alloc::format!(
                    "monomial outside {} at {}",
                    self.ring,
                    self.degree
                ))
            })?;
            v[i] += c;
        }
        Ok(v)
    }

    /// Coordinates in the basis: integers on free summands, residues in
    /// `[0, order)` on torsion summands.
    pub fn coordinates(&self, x: &Element) -> Result<Vec<BigInt>> {
        let mut v = self.column_vector(x)?;
        self.lattice.reduce(&mut v);
        let coords: Vec<BigInt> = self.basis.iter().map(|b| v[b.column].clone()).collect();
        for b in &self.basis {
            v[b.column] = BigInt::zero();
        }
        if v.iter().any(|x| !x.is_zero()) {
            return Err(Error::Inconsistent(alloc::format!(
                "reduction left a non-basis monomial in {} at {}",
                self.ring,
                self.degree
            )));
        }
        Ok(coords)
    }

    pub fn mod2_coordinates(&self, x: &Element) -> Result<BitVec> {
        Ok(BitVec::from_bits(self.coordinates(x)?.iter().map(|c| c.is_odd())))
    }

    pub fn element_from(&self, coords: &[BigInt]) -> Element {
        let mut out = Element::zero(self.coefficients);
        for (b, c) in self.basis.iter().zip(coords) {
            out.add_term(b.monomial.clone(), c.clone());
        }
        out
    }

    pub fn normal_form(&self, x: &Element) -> Result<Element> {
        Ok(self.element_from(&self.coordinates(x)?))
    }

    pub fn is_zero(&self, x: &Element) -> Result<bool> {
        Ok(self.coordinates(x)?.iter().all(Zero::is_zero))
    }

    /// Order of `x` in the group (`None` if infinite, `1` for zero).
    pub fn order_of(&self, x: &Element) -> Result<Option<BigInt>> {
        let v = self.column_vector(x)?;
        Ok(self.lattice.order_of(&v))
    }

    /// `Group: {b1, b2, ...}` with the ring's monomial rendering.
    pub fn render(&self, ring: &Ring) -> String {
        let names: Vec<String> = self.basis.iter().map(|b| ring.render_monomial(&b.monomial)).collect();
        alloc::format!("{}: {{{}}}", self.group, names.join(", "))
    }
}

impl Ring {
    /// The graded piece at `deg`: spanning monomials, every relation instance
    /// times every complementary monomial, then a Hermite basis in which the
    /// largest monomials are eliminated first.
    pub fn graded_piece(&self, deg: Bidegree) -> Result<GradedPiece> {
        let spanning = self.enumerate_monomials(deg)?;
        let columns: Vec<Monomial> = spanning.into_iter().rev().collect();
        let n = columns.len();
        let index: BTreeMap<Monomial, usize> =
            columns.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

        let mut rows: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        if n > 0 && !self.is_laurent() {
            let mut complements: BTreeMap<Bidegree, Vec<Monomial>> = BTreeMap::new();
            for r in self.relation_instances(self.parameter_bound(deg))? {
                let rest = deg - r.degree;
                if rest.p < 0 || (self.is_bigraded() && rest.q < 0) {
                    continue;
                }
                if let alloc::collections::btree_map::Entry::Vacant(e) = complements.entry(rest) {
                    e.insert(self.enumerate_monomials(rest)?);
                }
                for m in &complements[&rest] {
                    let mut row = alloc::vec![BigInt::zero(); n];
                    for (t, c) in r.element.terms() {
                        let prod = t.mul(m);
                        let &i = index.get(&prod).ok_or_else(|| {
                            Error::Inconsistent(alloc::format!(
                                "relation {} lands outside {} at {deg}",
                                r.label,
                                self.name()
                            ))
                        })?;
                        row[i] += c;
                    }
                    if self.coefficients() == Coefficients::Mod2 {
                        for x in row.iter_mut() {
                            *x = x.mod_floor(&BigInt::from(2));
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.insert(row);
                    }
                }
            }
        }
        let relation_rows = rows.len();

        let (lattice, group) = match self.coefficients() {
            Coefficients::Integers => {
                let lattice = EchelonLattice::new(n, rows);
                let hnf = IntegerMatrix::from_rows(
                    n,
                    lattice.pivots().iter().map(|r| r.entries.clone()),
                );
                (lattice, cokernel_structure(&hnf, n))
            }
            Coefficients::Mod2 => {
                let bits: Vec<BitVec> = rows
                    .iter()
                    .map(|r| BitVec::from_bits(r.iter().map(|x| x.is_odd())))
                    .collect();
                let red = f2_row_reduce(&BitMatrix::new(n, bits));
                let doubled = (0..n).map(|i| {
                    let mut e = alloc::vec![BigInt::zero(); n];
                    e[i] = BigInt::from(2);
                    e
                });
                let lattice = EchelonLattice::new(n, rows.into_iter().chain(doubled));
                (lattice, AbelianGroupStructure::two_torsion(0, n - red.rank))
            }
        };

        let pivots: BTreeMap<usize, usize> =
            lattice.pivots().iter().enumerate().map(|(i, r)| (r.col, i)).collect();
        let mut basis = Vec::new();
        for (col, m) in columns.iter().enumerate() {
            let order = match pivots.get(&col) {
                None => None,
                Some(&i) => {
                    let row = &lattice.pivots()[i];
                    if row.pivot.is_one() {
                        continue;
                    }
                    if row.entries.iter().enumerate().any(|(j, x)| j != col && !x.is_zero()) {
                        return Err(Error::Inconsistent(alloc::format!(
                            "torsion of {} at {deg} is not spanned by monomials",
                            self.name()
                        )));
                    }
                    Some(row.pivot.clone())
                }
            };
            basis.push(BasisEntry { monomial: m.clone(), order, column: col });
        }
        basis.sort_by(|a, b| a.monomial.cmp(&b.monomial));

        let implied = AbelianGroupStructure::new(
            basis.iter().filter(|b| b.order.is_none()).count(),
            basis.iter().filter_map(|b| b.order.clone()).collect(),
        );
        if implied != group {
            return Err(Error::Inconsistent(alloc::format!(
                "{} at {deg}: Hermite basis gives {implied}, Smith form gives {group}",
                self.name()
            )));
        }
        Ok(GradedPiece {
            ring: self.name().into(),
            degree: deg,
            coefficients: self.coefficients(),
            columns,
            index,
            lattice,
            basis,
            group,
            relation_rows,
        })
    }
}
