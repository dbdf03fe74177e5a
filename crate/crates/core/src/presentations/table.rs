//! Poincaré tables and the Hilbert series of a polynomial ring.

use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::bidegree::Bidegree;
use crate::error::Result;
use crate::linalg::AbelianGroupStructure;
use crate::presentations::{GradedPiece, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub degree: Bidegree,
    pub group: AbelianGroupStructure,
    pub basis: Vec<String>,
}

impl TableCell {
    pub fn new(ring: &Ring, piece: &GradedPiece) -> Self {
        TableCell {
            degree: piece.degree(),
            group: piece.group().clone(),
            basis: piece.basis_monomials().map(|m| ring.render_monomial(m)).collect(),
        }
    }
}

/// Groups indexed by bidegree; single-graded rings have one column (`q = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareTable {
    pub ring: String,
    pub p_max: i64,
    pub q_max: i64,
    pub cells: Vec<TableCell>,
}

impl PoincareTable {
    /// Sorts the cells; they may arrive in any order.
    pub fn from_cells(ring: &Ring, p_max: i64, q_max: i64, mut cells: Vec<TableCell>) -> Self {
        cells.sort_by_key(|c| c.degree);
        let q_max = if ring.is_bigraded() { q_max } else { 0 };
        PoincareTable { ring: ring.name().into(), p_max, q_max, cells }
    }

    pub fn get(&self, deg: Bidegree) -> Option<&TableCell> {
        self.cells.binary_search_by_key(&deg, |c| c.degree).ok().map(|i| &self.cells[i])
    }
}

/// Bidegrees covered by a table, in order.
pub fn table_degrees(ring: &Ring, p_max: i64, q_max: i64) -> Vec<Bidegree> {
    let q_top = if ring.is_bigraded() { q_max } else { 0 };
    (0..=p_max).flat_map(|p| (0..=q_top).map(move |q| Bidegree::new(p, q))).collect()
}

pub fn poincare_table(ring: &Ring, p_max: i64, q_max: i64) -> Result<PoincareTable> {
    let cells = table_degrees(ring, p_max, q_max)
        .into_iter()
        .map(|d| Ok(TableCell::new(ring, &ring.graded_piece(d)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PoincareTable::from_cells(ring, p_max, q_max, cells))
}

/// Coefficients of `Π 1/(1 - t^d)` up to `t^n_max`.
pub fn polynomial_hilbert_series(degrees: &[u32], n_max: usize) -> Vec<u64> {
    let mut series = alloc::vec![0u64; n_max + 1];
    series[0] = 1;
    for &d in degrees {
        let d = d as usize;
        if d == 0 {
            continue;
        }
        for n in d..=n_max {
            series[n] += series[n - d];
        }
    }
    series
}

/// Whether the piece dimensions of a relation-free single-graded ring match
/// the Hilbert series of the polynomial ring on its generators.
pub fn hilbert_series_check(ring: &Ring, n_max: usize) -> Result<bool> {
    let degrees: Vec<u32> = ring.generators().iter().map(|g| g.degree.p as u32).collect();
    let expected = polynomial_hilbert_series(&degrees, n_max);
    for (n, want) in expected.iter().enumerate() {
        let piece = ring.graded_piece(Bidegree::single(n as i64))?;
        if piece.dim() as u64 != *want {
            return Ok(false);
        }
    }
    Ok(true)
}
