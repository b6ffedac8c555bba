use serde::{Deserialize, Serialize};

use super::BrauerClass;

/// Exponents with `[B] = [A]^{⊗r}` and `[A] = [B]^{⊗s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupWitness {
    pub r: u64,
    pub s: u64,
}

impl SubgroupWitness {
    pub fn verify(&self, a: &BrauerClass, b: &BrauerClass) -> bool {
        &a.power(self.r as i64) == b && &b.power(self.s as i64) == a
    }
}

fn smallest_exponent(base: &BrauerClass, target: &BrauerClass) -> Option<u64> {
    (1..=base.period()).find(|&r| &base.power(r as i64) == target)
}

/// Witness that `A` and `B` generate the same cyclic subgroup of Br(ℚ), with
/// the smallest `r` and then the smallest `s`.
pub fn same_cyclic_subgroup(a: &BrauerClass, b: &BrauerClass) -> Option<SubgroupWitness> {
    let r = smallest_exponent(a, b)?;
    let s = smallest_exponent(b, a)?;
    Some(SubgroupWitness { r, s })
}

/// Whether `B` dies over the function field of the Brauer–Severi variety of
/// `A`, i.e. `B` lies in the subgroup generated by `A`.
pub fn splits_over_function_field(b: &BrauerClass, a: &BrauerClass) -> bool {
    (0..a.period()).any(|r| &a.power(r as i64) == b)
}

/// `ind(B ⊗ F(X_A)) = min_i ind(B ⊗ A^{⊗i})` over `0 <= i < per(A)`.
pub fn index_over_function_field(b: &BrauerClass, a: &BrauerClass) -> u64 {
    (0..a.period())
        .map(|i| b.tensor(&a.power(i as i64)).index())
        .min()
        .unwrap_or(1)
}
