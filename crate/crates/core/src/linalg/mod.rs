//! Exact linear algebra: integer matrices, Smith and Hermite forms, and
//! bit-packed elimination over `Z/2`.

mod f2;
mod group;
mod hnf;
mod matrix;
mod snf;

pub use f2::{f2_row_reduce, BitMatrix, BitVec, F2Reduction};
pub use group::{cokernel_structure, AbelianGroupStructure};
pub use hnf::{EchelonLattice, PivotRow};
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithForm};
