//! Exact arithmetic substrate.

mod cyclotomic;
pub mod intmath;
mod matrix;
mod poly;
mod quadext;
mod qz;
mod rational;

pub use cyclotomic::{CycElem, CyclotomicField};
pub use matrix::{matrix_quad_det, poly_det, rational_rank};
pub use poly::{Monomial, MultiPoly, TermJson};
pub use quadext::QuadExt;
pub use qz::QZ;
pub use rational::Rational;
