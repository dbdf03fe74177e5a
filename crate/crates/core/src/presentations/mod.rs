//! Ring presentations and their graded pieces.

pub mod catalog;
mod laurent;
mod piece;
mod ring;
pub mod spec;
mod table;
pub mod template;

pub use laurent::{deficit, max_pairing};
pub use piece::{BasisEntry, GradedPiece};
pub use ring::{RelationInstance, Ring};
pub use spec::{GeneratorSpec, Grading, LaurentSpec, PairWeight, RelationTemplate, RingPresentation};
pub use table::{
    hilbert_series_check, poincare_table, polynomial_hilbert_series, table_degrees, PoincareTable,
    TableCell,
};
pub use template::{Affine, Template};

use alloc::vec::Vec;

use crate::bidegree::Bidegree;
use crate::error::Result;
use crate::monomial::Monomial;

pub fn enumerate_monomials(ring: &Ring, deg: Bidegree) -> Result<Vec<Monomial>> {
    ring.enumerate_monomials(deg)
}

pub fn graded_piece(ring: &Ring, deg: Bidegree) -> Result<GradedPiece> {
    ring.graded_piece(deg)
}

/// The closed-form basis of mod 2 motivic cohomology at `deg`.
pub fn mod2_motivic_basis(deg: Bidegree) -> Result<Vec<Monomial>> {
    Ring::new(catalog::motivic_z2())?.enumerate_monomials(deg)
}
