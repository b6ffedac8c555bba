//! Brauer–Severi varieties and the birationality criteria attached to pairs
//! of algebras.

mod equivalence;
mod sympow;
mod variety;

pub use equivalence::{
    equivalence_report, morita_bijection, ImpliedVerdicts, EquivalenceReport, MoritaCheck,
    QuadraticIndexCheck, ReportOptions, SubgroupCheck, DEFAULT_BATTERY,
};
pub use sympow::{
    birational_sympow_exists, sympow_dimension_model, sympow_verdict, SymPowDimensions,
    SymPowKind, SymPowVerdict,
};
pub use variety::{bs_invariants, stably_birational, BSVariety};
