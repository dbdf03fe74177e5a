//! Row-style Hermite normal form of an integer lattice, used to pick
//! canonical representatives modulo a relation lattice.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotRow {
    pub col: usize,
    /// Positive leading entry.
    pub pivot: BigInt,
    pub entries: Vec<BigInt>,
}

/// Echelon basis of the row lattice of a matrix.
///
/// Pivots increase strictly left to right, each pivot is positive, and every
/// entry sitting above a later pivot lies in `[0, pivot)`. These conditions
/// make the reduced representative of a vector unique in its coset.
#[derive(Clone, Debug, Default)]
pub struct EchelonLattice {
    cols: usize,
    rows: Vec<PivotRow>,
}

impl EchelonLattice {
    pub fn new<I>(cols: usize, generators: I) -> Self
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut pending: Vec<Vec<BigInt>> = generators
            .into_iter()
            .inspect(|r| assert_eq!(r.len(), cols, "generator has the wrong length"))
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let mut rows: Vec<PivotRow> = Vec::new();

        for col in 0..cols {
            // Euclid on the entries of this column until one row survives.
            loop {
                let mut live: Vec<usize> =
                    (0..pending.len()).filter(|&i| !pending[i][col].is_zero()).collect();
                if live.len() <= 1 {
                    break;
                }
                live.sort_by(|&a, &b| pending[a][col].abs().cmp(&pending[b][col].abs()));
                let best = live[0];
                let lead = pending[best][col].clone();
                for &i in &live[1..] {
                    let q = &pending[i][col] / &lead;
                    let src = pending[best].clone();
                    for (x, s) in pending[i].iter_mut().zip(&src) {
                        *x -= &q * s;
                    }
                }
                pending.retain(|r| r.iter().any(|x| !x.is_zero()));
            }
            let Some(idx) = pending.iter().position(|r| !r[col].is_zero()) else {
                continue;
            };
            let mut entries = pending.swap_remove(idx);
            if entries[col].is_negative() {
                for x in entries.iter_mut() {
                    *x = -core::mem::take(x);
                }
            }
            let pivot = entries[col].clone();
            for earlier in rows.iter_mut() {
                let q = earlier.entries[col].div_floor(&pivot);
                if !q.is_zero() {
                    for (x, s) in earlier.entries.iter_mut().zip(&entries) {
                        *x -= &q * s;
                    }
                }
            }
            rows.push(PivotRow { col, pivot, entries });
        }
        debug_assert!(pending.iter().all(|r| r.iter().all(Zero::is_zero)));
        EchelonLattice { cols, rows }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[PivotRow] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &mut [BigInt]) {
        assert_eq!(v.len(), self.cols);
        for row in &self.rows {
            let q = v[row.col].div_floor(&row.pivot);
            if q.is_zero() {
                continue;
            }
            for (x, s) in v.iter_mut().zip(&row.entries) {
                *x -= &q * s;
            }
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Smallest `d > 0` with `d * v` in the lattice, or `None` if `v` has
    /// infinite order in the quotient.
    pub fn order_of(&self, v: &[BigInt]) -> Option<BigInt> {
        // Lattice of (x, c) with x = c*v + (lattice); the rows whose first
        // `cols` coordinates vanish carry the multiples of v that land inside.
        let n = self.cols;
        let mut gens: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows.len() + 1);
        let mut first: Vec<BigInt> = v.to_vec();
        first.push(BigInt::from(1));
        gens.push(first);
        for row in &self.rows {
            let mut r = row.entries.clone();
            r.push(BigInt::zero());
            gens.push(r);
        }
        let ext = EchelonLattice::new(n + 1, gens);
        ext.rows.iter().find(|r| r.col == n).map(|r| r.pivot.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn echelon_of_simple_lattice() {
        let l = EchelonLattice::new(3, [big(&[2, 4, 0]), big(&[0, 3, 6]), big(&[4, 2, 0])]);
        for row in l.pivots() {
            assert!(row.pivot > BigInt::zero());
        }
        // 2*(1,2,0) and (4,2,0): index-6 sublattice in the first two coordinates.
        assert!(l.contains(&big(&[2, 4, 0])));
        assert!(l.contains(&big(&[0, 3, 6])));
        assert!(!l.contains(&big(&[1, 0, 0])));
    }

    #[test]
    fn reduce_is_canonical() {
        let l = EchelonLattice::new(2, [big(&[1, -4])]);
        // y^2 - 4 d4 with y^2 in column 0: y^2 reduces to 4 d4.
        let mut v = big(&[1, 0]);
        l.reduce(&mut v);
        assert_eq!(v, big(&[0, 4]));
        let mut w = big(&[3, -7]);
        l.reduce(&mut w);
        assert_eq!(w, big(&[0, 5]));
    }

    #[test]
    fn order_in_quotient() {
        // Z^2 / <(0,2)>: (0,1) has order 2, (1,0) infinite order.
        let l = EchelonLattice::new(2, [big(&[0, 2])]);
        assert_eq!(l.order_of(&big(&[0, 1])), Some(BigInt::from(2)));
        assert_eq!(l.order_of(&big(&[1, 0])), None);
        assert_eq!(l.order_of(&big(&[0, 2])), Some(BigInt::from(1)));
        let empty = EchelonLattice::new(2, vec![]);
        assert_eq!(empty.order_of(&big(&[0, 1])), None);
    }
}
