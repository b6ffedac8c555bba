use serde::Serialize;

use crate::brauer::{index_over_function_field, AlgebraSpec, BrauerClass};
use crate::{Error, Result};

/// Brauer–Severi variety of an algebra of degree `n`: a twisted form of
/// `P^{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BSVariety {
    pub class: BrauerClass,
    pub degree: usize,
    pub dimension: usize,
    pub index: u64,
    pub period: u64,
    /// Dimension of the minimal linear subvariety, `ind − 1`.
    pub minimal_subvariety_dim: u64,
    /// `(r, dim X_r)` for the generalized varieties, `dim X_r = r(n − r)`.
    pub generalized_dims: Vec<(usize, usize)>,
}

pub fn bs_invariants(algebra: &AlgebraSpec) -> Result<BSVariety> {
    let class = algebra.class()?;
    let n = algebra.degree();
    let index = class.index();
    Ok(BSVariety {
        degree: n,
        dimension: n - 1,
        index,
        period: class.period(),
        minimal_subvariety_dim: index - 1,
        generalized_dims: (1..n).map(|r| (r, r * (n - r))).collect(),
        class,
    })
}

/// Stable birationality of the Brauer–Severi varieties of two algebras of
/// the same degree.
///
/// Decided through index reduction: each class must split over the function
/// field of the other variety.
pub fn stably_birational(a: &BrauerClass, b: &BrauerClass, deg_a: usize, deg_b: usize) -> Result<bool> {
    if deg_a != deg_b {
        return Err(Error::Domain(format!("degrees differ: {deg_a} vs {deg_b}")));
    }
    Ok(index_over_function_field(b, a) == 1 && index_over_function_field(a, b) == 1)
}
