//! Brauer classes over ℚ, modelled by their local invariants.
//!
//! A class is a finitely supported map from places of ℚ to ℚ/ℤ whose values
//! sum to zero. Tensor product is pointwise addition, and because the base
//! field is a number field the index of every class equals its period.

mod algebra;
mod class;
mod hilbert;
mod place;
mod restrict;
mod subgroup;

pub use algebra::AlgebraSpec;
pub use class::{index, index_tensor_power, period, tensor, BrauerClass};
pub use hilbert::{hilbert_symbol, quaternion_class};
pub use place::Place;
pub use restrict::{
    decomposition, is_fractional_splitting, restrict_quadratic, ExtPlace, LocalBehaviour,
    RestrictedClass,
};
pub use subgroup::{
    index_over_function_field, same_cyclic_subgroup, splits_over_function_field, SubgroupWitness,
};
