//! Gaussian elimination over `Z/2` on bit-packed rows.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use super::IntegerMatrix;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        let parity: u32 =
            self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        parity % 2 == 1
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn new(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix { cols, rows }
    }

    pub fn from_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.as_ref().len(), cols);
                BitVec::from_bits(r.as_ref().iter().map(|&b| b & 1 == 1))
            })
            .collect();
        BitMatrix { cols, rows }
    }

    /// Reduction of an integer matrix modulo 2.
    pub fn from_integer(m: &IntegerMatrix) -> Self {
        let two = BigInt::from(2);
        let rows = m
            .row_vectors()
            .map(|r| BitVec::from_bits(r.iter().map(|x| x.mod_floor(&two) == BigInt::from(1))))
            .collect();
        BitMatrix { cols: m.cols(), rows }
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = vec![BitVec::zeros(self.rows.len()); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t[j].set(i, true);
            }
        }
        BitMatrix { cols: self.rows.len(), rows: t }
    }

    pub fn rank(&self) -> usize {
        f2_row_reduce(self).rank
    }

    /// `self * v` where `v` has `cols` entries.
    pub fn apply(&self, v: &BitVec) -> BitVec {
        BitVec::from_bits(self.rows.iter().map(|r| r.dot(v)))
    }
}

#[derive(Clone, Debug)]
pub struct F2Reduction {
    pub rank: usize,
    /// Reduced row echelon basis of the row space.
    pub basis: Vec<BitVec>,
    pub pivots: Vec<usize>,
    /// Basis of `{x : M x = 0}`.
    pub kernel: Vec<BitVec>,
}

pub fn f2_row_reduce(m: &BitMatrix) -> F2Reduction {
    let mut rows: Vec<BitVec> = m.rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);

    let mut kernel = Vec::new();
    for free in (0..m.cols).filter(|c| !pivots.contains(c)) {
        let mut v = BitVec::unit(m.cols, free);
        for (row, &pc) in rows.iter().zip(&pivots) {
            if row.get(free) {
                v.set(pc, true);
            }
        }
        kernel.push(v);
    }
    F2Reduction { rank: r, basis: rows, pivots, kernel }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let m = BitMatrix::from_rows(3, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let r = f2_row_reduce(&m);
        assert_eq!(r.rank, 3);
        assert!(r.kernel.is_empty());
    }

    #[test]
    fn repeated_row() {
        let m = BitMatrix::from_rows(2, &[[1, 1], [1, 1]]);
        let r = f2_row_reduce(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel, [BitVec::from_bits([true, true])]);
    }

    #[test]
    fn no_relations_leave_everything_free() {
        let m = BitMatrix::new(3, Vec::new());
        let r = f2_row_reduce(&m);
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel.len(), 3);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = BitMatrix::from_rows(
            70,
            &[
                [1u8; 70],
                core::array::from_fn::<u8, 70, _>(|i| (i % 3 == 0) as u8),
                core::array::from_fn::<u8, 70, _>(|i| (i % 5 == 1) as u8),
            ],
        );
        let r = f2_row_reduce(&m);
        assert_eq!(r.rank + r.kernel.len(), 70);
        for k in &r.kernel {
            assert!(m.apply(k).is_zero());
        }
    }
}
