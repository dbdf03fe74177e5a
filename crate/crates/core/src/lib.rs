//! Exact-arithmetic kernel for the cohomology rings of `BSO(4)`.
//!
//! The crate holds six ring presentations (classical mod 2 and integral
//! cohomology, the integral cohomology reduced mod 2, the Chow ring, and the
//! mod 2 and integral motivic rings), the homomorphisms between them, and a
//! suite of degree-wise checks. Everything is computed per graded piece with
//! arbitrary-precision integers or bit-packed `Z/2` vectors; there is no
//! floating point anywhere.
//!
//! The crate is `no_std` and only needs `alloc`. IO, configuration and the
//! command-line front end live in the `mrv` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bidegree;
pub mod context;
pub mod error;
pub mod linalg;
pub mod maps;
pub mod monomial;
pub mod presentations;
pub mod verify;

pub use bidegree::Bidegree;
pub use context::Context;
pub use error::Error;
pub use monomial::{Coefficients, Element, GenKey, Monomial};
