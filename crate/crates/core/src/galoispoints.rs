//! Galois-stable point sets in general position.
//!
//! Distinct points `α_1, ..., α_{n+1}` of the affine line over ℚ(ζ_N) map to
//! `β_i = (1 : α_i : ... : α_i^n)` on the moment curve in `Pⁿ`. The
//! Vandermonde determinant `∏_{i<j} (α_j − α_i)` is nonzero, every subset of
//! the `β_i` has full rank, and since the map is given by polynomials with
//! rational coefficients the Galois group permutes the `β_i` exactly as it
//! permutes the `α_i`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::exactnum::{CycElem, CyclotomicField, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct PointConfig {
    pub field: Arc<CyclotomicField>,
    pub alphas: Vec<CycElem>,
    pub betas: Vec<Vec<CycElem>>,
}

impl PointConfig {
    /// Builds the moment-curve lift without checking distinctness.
    pub fn from_alphas_unchecked(alphas: Vec<CycElem>) -> Result<Self> {
        let field = alphas
            .first()
            .map(|a| Arc::clone(a.field()))
            .ok_or_else(|| Error::Degenerate("no points".into()))?;
        if alphas.iter().any(|a| a.conductor() != field.conductor()) {
            return Err(Error::Domain("points from different cyclotomic fields".into()));
        }
        let n = alphas.len() - 1;
        let betas = alphas
            .iter()
            .map(|a| (0..=n).map(|k| a.pow(k as u32)).collect())
            .collect();
        Ok(PointConfig { field, alphas, betas })
    }

    /// Projective dimension `n` of the ambient `Pⁿ`.
    pub fn dimension(&self) -> usize {
        self.alphas.len() - 1
    }

    /// `∏_{i<j} (α_j − α_i)`.
    pub fn vandermonde_product(&self) -> CycElem {
        let mut acc = self.field.constant(Rational::one());
        for j in 0..self.alphas.len() {
            for i in 0..j {
                acc = acc.mul(&self.alphas[j].sub(&self.alphas[i]));
            }
        }
        acc
    }
}

fn first_repeat(alphas: &[CycElem]) -> Option<(usize, usize)> {
    for j in 0..alphas.len() {
        for i in 0..j {
            if alphas[i] == alphas[j] {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn vandermonde_lift(alphas: Vec<CycElem>) -> Result<PointConfig> {
    if let Some((i, j)) = first_repeat(&alphas) {
        return Err(Error::Degenerate(format!("alpha {i} and alpha {j} coincide")));
    }
    let config = PointConfig::from_alphas_unchecked(alphas)?;
    if config.vandermonde_product().is_zero() {
        return Err(Error::Internal("Vandermonde product vanished for distinct points".into()));
    }
    Ok(config)
}

/// Rank of a matrix over ℚ(ζ_N) by Gaussian elimination.
pub fn cyc_rank(rows: &[Vec<CycElem>]) -> usize {
    let mut a: Vec<Vec<CycElem>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].inverse().expect("nonzero pivot is invertible");
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].mul(&inv);
            for c in col..ncols {
                let delta = factor.mul(&a[rank][c]);
                a[r][c] = a[r][c].sub(&delta);
            }
        }
        rank += 1;
    }
    rank
}

/// Every nonempty subset of the `β_i` spans a projective subspace of the
/// expected dimension.
pub fn general_position_check(config: &PointConfig) -> bool {
    let count = config.betas.len();
    assert!(count < 32, "desk-scale configurations only");
    (1u32..1 << count).into_par_iter().all(|mask| {
        let rows: Vec<Vec<CycElem>> = (0..count)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| config.betas[i].clone())
            .collect();
        cyc_rank(&rows) == rows.len()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisStability {
    pub a: i64,
    pub stable: bool,
    pub alpha_permutation: Option<Vec<usize>>,
    pub beta_permutation: Option<Vec<usize>>,
}

impl GaloisStability {
    /// Stable, and σ_a moves the lifted points the way it moves the α_i.
    pub fn equivariant(&self) -> bool {
        self.stable && self.alpha_permutation == self.beta_permutation
    }
}

fn permutation_of<T: PartialEq>(images: &[T], targets: &[T]) -> Option<Vec<usize>> {
    images
        .iter()
        .map(|x| targets.iter().position(|t| t == x))
        .collect()
}

pub fn galois_stability_check(config: &PointConfig, a: i64) -> Result<GaloisStability> {
    let moved: Vec<CycElem> = config
        .alphas
        .iter()
        .map(|x| x.apply_galois(a))
        .collect::<Result<_>>()?;
    let alpha_permutation = permutation_of(&moved, &config.alphas);
    let stable = alpha_permutation.is_some();
    let beta_permutation = if stable {
        let moved_betas: Vec<Vec<CycElem>> = config
            .betas
            .iter()
            .map(|b| b.iter().map(|x| x.apply_galois(a)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        permutation_of(&moved_betas, &config.betas)
    } else {
        None
    };
    Ok(GaloisStability {
        a,
        stable,
        alpha_permutation,
        beta_permutation,
    })
}

/// Orbit of `ζ^e` under all of (ℤ/N)^×, in order of first appearance.
pub fn galois_orbit(field: &Arc<CyclotomicField>, e: i64) -> Vec<CycElem> {
    let mut out: Vec<CycElem> = Vec::new();
    for a in field.units() {
        let x = field.zeta_pow(e * a as i64);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Appends the smallest unused non-negative integers until `target` points.
pub fn pad_orbit(orbit: &[CycElem], target: usize) -> Result<Vec<CycElem>> {
    if orbit.len() > target {
        return Err(Error::Shape(format!(
            "orbit of size {} exceeds target {target}",
            orbit.len()
        )));
    }
    if let Some((i, j)) = first_repeat(orbit) {
        return Err(Error::Degenerate(format!("orbit entries {i} and {j} coincide")));
    }
    let field = orbit
        .first()
        .map(|x| Arc::clone(x.field()))
        .ok_or_else(|| Error::Degenerate("empty orbit".into()))?;
    let mut out = orbit.to_vec();
    let mut k = 0i64;
    while out.len() < target {
        let c = field.constant(Rational::from(k));
        if !out.contains(&c) {
            out.push(c);
        }
        k += 1;
    }
    Ok(out)
}
