use serde::Serialize;

use super::stably_birational;
use crate::brauer::{restrict_quadratic, same_cyclic_subgroup, AlgebraSpec, BrauerClass, SubgroupWitness};
use crate::exactnum::intmath::is_square_free;
use crate::{Error, Result};

/// Quadratic fields ℚ(√d) tried first when comparing indices.
pub const DEFAULT_BATTERY: [i64; 9] = [-1, 2, -2, 3, -3, 5, -7, 13, 17];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub battery: Vec<i64>,
    /// Total number of quadratic fields tried before giving up on a
    /// separator.
    pub cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            battery: DEFAULT_BATTERY.to_vec(),
            cap: 50,
        }
    }
}

/// Bijection `φ` of `{0, ..., n−1}` with `[A^{⊗i}] = [B^{⊗φ(i)}]`, the
/// lexicographically smallest one when several exist.
pub fn morita_bijection(a: &BrauerClass, b: &BrauerClass, n: usize) -> Option<Vec<usize>> {
    let powers_b: Vec<BrauerClass> = (0..n).map(|j| b.power(j as i64)).collect();
    let mut used = vec![false; n];
    let mut phi = Vec::with_capacity(n);
    for i in 0..n {
        let ai = a.power(i as i64);
        let j = (0..n).find(|&j| !used[j] && powers_b[j] == ai)?;
        used[j] = true;
        phi.push(j);
    }
    Some(phi)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupCheck {
    pub holds: bool,
    pub witness: Option<SubgroupWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoritaCheck {
    pub holds: bool,
    pub permutation: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticIndexCheck {
    /// Indices agreed over every field that was tried.
    pub holds: bool,
    pub battery: Vec<i64>,
    pub separating_d: Option<i64>,
    /// `(d, ind(A ⊗ ℚ(√d)), ind(B ⊗ ℚ(√d)))` for each field tried.
    pub indices: Vec<(i64, u64, u64)>,
}

/// Conditions that hold exactly when the subgroup condition does, but that
/// this crate cannot construct: they are reported as consequences of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImpliedVerdicts {
    pub rational_embeddings_between_varieties: bool,
    pub dominant_rational_maps: bool,
    pub norm_hypersurfaces_birational: bool,
    pub embeddings_into_smooth_norm_locus: bool,
    pub basis: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub degree: usize,
    pub class_a: BrauerClass,
    pub class_b: BrauerClass,
    pub same_subgroup: SubgroupCheck,
    pub morita: MoritaCheck,
    pub quadratic_indices: QuadraticIndexCheck,
    pub stably_birational: bool,
    pub implied: ImpliedVerdicts,
    /// The independently computed conditions agree, and the sampled index
    /// comparison does not contradict them.
    pub consistency: bool,
}

impl EquivalenceReport {
    pub fn equivalent(&self) -> bool {
        self.same_subgroup.holds
    }

    /// True when the subgroups differ but no tried quadratic field told the
    /// indices apart.
    pub fn unseparated(&self) -> bool {
        !self.same_subgroup.holds && self.quadratic_indices.separating_d.is_none()
    }
}

/// Square-free `d ∉ {0, 1}` ordered by `|d|`, negative first.
fn square_free_sequence() -> impl Iterator<Item = i64> {
    (1i64..)
        .flat_map(|k| [-k, k])
        .filter(|&d| d != 1 && is_square_free(d))
}

fn compare_indices(a: &BrauerClass, b: &BrauerClass, opts: &ReportOptions, search: bool) -> Result<QuadraticIndexCheck> {
    for &d in &opts.battery {
        if d == 0 || d == 1 || !is_square_free(d) {
            return Err(Error::Domain(format!("battery entry {d} is not a valid square-free d")));
        }
    }
    let mut tried: Vec<i64> = Vec::new();
    let mut indices = Vec::new();
    let mut separating = None;
    let extension = square_free_sequence().filter(|d| !opts.battery.contains(d));
    let candidates = opts.battery.iter().copied().chain(extension);
    for d in candidates {
        if tried.len() >= opts.cap.max(opts.battery.len()) {
            break;
        }
        if tried.len() >= opts.battery.len() && !search {
            break;
        }
        if tried.contains(&d) {
            continue;
        }
        let ia = restrict_quadratic(a, d)?.index();
        let ib = restrict_quadratic(b, d)?.index();
        tried.push(d);
        indices.push((d, ia, ib));
        if ia != ib {
            separating = Some(d);
            break;
        }
    }
    Ok(QuadraticIndexCheck {
        holds: separating.is_none(),
        battery: tried,
        separating_d: separating,
        indices,
    })
}

pub fn equivalence_report(a: &AlgebraSpec, b: &AlgebraSpec, opts: &ReportOptions) -> Result<EquivalenceReport> {
    let n = a.degree();
    if n != b.degree() {
        return Err(Error::Domain(format!("degrees differ: {} vs {}", n, b.degree())));
    }
    let class_a = a.class()?;
    let class_b = b.class()?;

    let witness = same_cyclic_subgroup(&class_a, &class_b);
    let same_subgroup = SubgroupCheck {
        holds: witness.is_some(),
        witness,
    };
    let permutation = morita_bijection(&class_a, &class_b, n);
    let morita = MoritaCheck {
        holds: permutation.is_some(),
        permutation,
    };
    let stable = stably_birational(&class_a, &class_b, n, n)?;
    // only search past the battery when a separator should exist
    let quadratic_indices = compare_indices(&class_a, &class_b, opts, !same_subgroup.holds)?;

    let consistency = same_subgroup.holds == morita.holds
        && same_subgroup.holds == stable
        && (!same_subgroup.holds || quadratic_indices.holds);
    let implied_flag = same_subgroup.holds;
    Ok(EquivalenceReport {
        degree: n,
        class_a,
        class_b,
        same_subgroup,
        morita,
        quadratic_indices,
        stably_birational: stable,
        implied: ImpliedVerdicts {
            rational_embeddings_between_varieties: implied_flag,
            dominant_rational_maps: implied_flag,
            norm_hypersurfaces_birational: implied_flag,
            embeddings_into_smooth_norm_locus: implied_flag,
            basis: "implied by the same-subgroup condition; not constructed",
        },
        consistency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(pairs: &[(&str, &str)]) -> BrauerClass {
        BrauerClass::from_strs(pairs).unwrap()
    }

    #[test]
    fn morita_examples() {
        let a = cls(&[("2", "1/3"), ("3", "2/3")]);
        assert_eq!(morita_bijection(&a, &a, 3), Some(vec![0, 1, 2]));
        assert_eq!(morita_bijection(&a, &a.power(2), 3), Some(vec![0, 2, 1]));
        let b = cls(&[("2", "1/3"), ("5", "2/3")]);
        assert_eq!(morita_bijection(&a, &b, 3), None);
    }

    #[test]
    fn identical_algebras() {
        let h = AlgebraSpec::quaternion(-1, -1);
        let r = equivalence_report(&h, &h, &ReportOptions::default()).unwrap();
        assert!(r.equivalent() && r.morita.holds && r.stably_birational && r.quadratic_indices.holds);
        assert_eq!(r.same_subgroup.witness, Some(SubgroupWitness { r: 1, s: 1 }));
        assert!(r.consistency);
        assert_eq!(r.quadratic_indices.battery.len(), 9);
    }

    #[test]
    fn conjugate_period_three() {
        let a = cls(&[("2", "1/3"), ("3", "2/3")]);
        let sa = AlgebraSpec::ByInvariants { class: a.clone(), degree: 3 };
        let sb = AlgebraSpec::ByInvariants { class: a.power(2), degree: 3 };
        let r = equivalence_report(&sa, &sb, &ReportOptions::default()).unwrap();
        assert!(r.equivalent() && r.consistency);
        assert_eq!(r.morita.permutation, Some(vec![0, 2, 1]));
    }

    #[test]
    fn hamilton_versus_two_five() {
        let r = equivalence_report(
            &AlgebraSpec::quaternion(-1, -1),
            &AlgebraSpec::quaternion(2, 5),
            &ReportOptions::default(),
        )
        .unwrap();
        assert!(!r.equivalent() && !r.morita.holds && !r.stably_birational);
        assert!(r.quadratic_indices.separating_d.is_some());
        assert!(!r.quadratic_indices.holds);
        assert!(r.consistency);
    }

    #[test]
    fn unequal_degrees_rejected() {
        let r = equivalence_report(
            &AlgebraSpec::quaternion(-1, -1),
            &AlgebraSpec::Split { degree: 3 },
            &ReportOptions::default(),
        );
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn bad_battery_rejected() {
        let h = AlgebraSpec::quaternion(-1, -1);
        let opts = ReportOptions { battery: vec![4], cap: 50 };
        assert!(equivalence_report(&h, &h, &opts).is_err());
    }

    #[test]
    fn extension_sequence() {
        let first: Vec<i64> = square_free_sequence().take(8).collect();
        assert_eq!(first, vec![-1, -2, 2, -3, 3, -5, 5, -6]);
    }
}
