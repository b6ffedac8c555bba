//! Exact computations with central simple algebras over ℚ.
//!
//! Brauer classes are modelled by their local invariants, which makes every
//! question in this crate decidable with exact arithmetic:
//!
//! * [`exactnum`]: rationals, ℚ/ℤ, multivariate polynomials, quadratic and
//!   cyclotomic extension elements.
//! * [`brauer`]: Hilbert symbols, quaternion classes, tensor/period/index
//!   arithmetic, cyclic-subgroup witnesses, index reduction and restriction
//!   to quadratic fields.
//! * [`ktheory`]: K₀ generators of Brauer–Severi varieties and the
//!   codimension-l Chow expansion in terms of AS-bundles.
//! * [`normform`]: reduced-norm polynomials and their smooth locus.
//! * [`geometry`]: Brauer–Severi invariants, symmetric-power verdicts and the
//!   equivalence report for pairs of algebras.
//! * [`galoispoints`]: Galois-stable point sets in general position on the
//!   moment curve.
//! * [`cli`]: the JSON front end used by the `brauer-calc` binary.
//!
//! The ground field is always ℚ. In particular index and period coincide for
//! every class, so questions about algebras with `ind ≠ per` cannot be posed.

pub mod brauer;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod galoispoints;
pub mod geometry;
pub mod ktheory;
pub mod normform;
mod wire;

pub use error::{Error, Result};

/// Desk-scale cap on matrix sizes, read from `BRAUER_CALC_MAX_DEGREE`.
pub fn max_degree() -> usize {
    std::env::var("BRAUER_CALC_MAX_DEGREE")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(6)
}
