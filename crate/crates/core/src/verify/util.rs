use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::linalg::{BitMatrix, BitVec};
use crate::monomial::Monomial;
use crate::presentations::{GradedPiece, Ring};

/// Renders monomials least first.
pub(crate) fn witnesses<'a, I>(ring: &Ring, monomials: I) -> Vec<String>
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let mut ms: Vec<&Monomial> = monomials.into_iter().collect();
    ms.sort();
    ms.dedup();
    ms.into_iter().map(|m| ring.render_monomial(m)).collect()
}

/// Basis indices that survive in `piece ⊗ Z/2` (free or even order).
pub(crate) fn tensor_indices(piece: &GradedPiece) -> Vec<usize> {
    (0..piece.dim())
        .filter(|&i| piece.basis()[i].order.as_ref().is_none_or(|o| o.is_even()))
        .collect()
}

/// Basis indices of summands of order exactly 2.
pub(crate) fn order_two_indices(piece: &GradedPiece) -> Vec<usize> {
    (0..piece.dim())
        .filter(|&i| piece.basis()[i].order.as_ref().is_some_and(|o| *o == 2.into()))
        .collect()
}

pub(crate) fn basis_at(piece: &GradedPiece, idx: impl IntoIterator<Item = usize>) -> Vec<&Monomial> {
    idx.into_iter().map(|i| &piece.basis()[i].monomial).collect()
}

pub(crate) fn select_rows(m: &BitMatrix, rows: &[usize]) -> BitMatrix {
    BitMatrix::new(m.cols(), rows.iter().map(|&i| m.rows()[i].clone()).collect())
}

/// Column `j` of a bit matrix.
pub(crate) fn column(m: &BitMatrix, j: usize) -> BitVec {
    BitVec::from_bits(m.rows().iter().map(|r| r.get(j)))
}

/// Matrix whose columns are the given vectors (all of length `rows`).
pub(crate) fn from_columns(rows: usize, cols: &[BitVec]) -> BitMatrix {
    BitMatrix::new(rows, cols.to_vec()).transpose()
}

pub(crate) fn compose(left: &BitMatrix, right: &BitMatrix) -> BitMatrix {
    let rows = left.rows().len();
    let cols: Vec<BitVec> = (0..right.cols()).map(|j| left.apply(&column(right, j))).collect();
    if cols.is_empty() {
        return BitMatrix::new(0, alloc::vec![BitVec::zeros(0); rows]);
    }
    from_columns(rows, &cols)
}
