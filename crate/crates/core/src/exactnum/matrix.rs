use std::collections::HashMap;

use rayon::prelude::*;

use super::{MultiPoly, QuadExt, Rational};
use crate::{Error, Result};

/// Minimal ring interface needed by the cofactor expansion.
pub(crate) trait DetRing: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl DetRing for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}

impl DetRing for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::zero(self.base.vars(), self.radicand.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
}

/// Laplace expansion along rows, memoised on the set of remaining columns.
///
/// Level `k` holds every minor built from rows `k..n`, keyed by its column
/// bitmask, so the work is `O(n · 2^n)` ring products instead of `n!`.
pub(crate) fn laplace_det<T: DetRing>(m: &[Vec<T>]) -> T {
    let n = m.len();
    assert!(n > 0 && n <= 16);
    assert!(m.iter().all(|row| row.len() == n));
    let zero = m[0][0].zero_like();

    // minors over rows n-1..n: single entries
    let mut level: HashMap<u32, T> = (0..n).map(|c| (1u32 << c, m[n - 1][c].clone())).collect();
    for row in (0..n - 1).rev() {
        let width = n - row;
        let masks: Vec<u32> = (0u32..1 << n).filter(|x| x.count_ones() as usize == width).collect();
        let next: Vec<(u32, T)> = masks
            .par_iter()
            .map(|&mask| {
                let mut acc = zero.clone();
                let mut pos = 0;
                for c in 0..n {
                    if mask & (1 << c) == 0 {
                        continue;
                    }
                    let entry = &m[row][c];
                    if !entry.is_zero() {
                        let minor = &level[&(mask & !(1 << c))];
                        let term = entry.mul(minor);
                        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                    }
                    pos += 1;
                }
                (mask, acc)
            })
            .collect();
        level = next.into_iter().collect();
    }
    level
        .remove(&((1u32 << n) - 1))
        .expect("full minor present")
}

/// Determinant of a square matrix of polynomials over a common variable list.
pub fn poly_det(entries: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = entries.len();
    if n == 0 {
        return Err(Error::Shape("empty matrix".into()));
    }
    if entries.iter().any(|row| row.len() != n) {
        return Err(Error::Shape(format!("matrix with {n} rows is not square")));
    }
    let vars = entries[0][0].vars();
    if entries.iter().flatten().any(|p| p.vars() != vars) {
        return Err(Error::Shape("entries over different variable sets".into()));
    }
    Ok(laplace_det(entries))
}

/// Determinant over ℚ(√a)[X]; the matrix must be square and nonempty.
pub fn matrix_quad_det(entries: &[Vec<QuadExt>]) -> QuadExt {
    laplace_det(entries)
}

/// Rank by exact Gaussian elimination.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].recip().expect("nonzero pivot");
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..ncols {
                let delta = &factor * &a[rank][c];
                a[r][c] -= &delta;
            }
        }
        rank += 1;
    }
    rank
}
