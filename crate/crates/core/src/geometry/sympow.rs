use serde::Serialize;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymPowKind {
    Rational,
    Birational,
    StablyBirational,
}

/// Relation between `S^m(X)` and `S^m(Y)` for Brauer–Severi varieties of
/// degree-`n` algebras that generate the same cyclic subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymPowVerdict {
    pub kind: SymPowKind,
    pub n: u64,
    pub m: u64,
    pub hypothesis: &'static str,
}

pub fn sympow_verdict(n: u64, m: u64) -> Result<SymPowVerdict> {
    if m == 0 || m > n {
        return Err(Error::OutOfRange(format!("power m = {m} outside 1..={n}")));
    }
    let kind = if m == n {
        SymPowKind::Rational
    } else if 2 * m > n {
        SymPowKind::Birational
    } else {
        SymPowKind::StablyBirational
    };
    Ok(SymPowVerdict {
        kind,
        n,
        m,
        hypothesis: if kind == SymPowKind::Rational {
            "none: S^n(X) is rational for every algebra of degree n"
        } else {
            "A and B generate the same cyclic subgroup of Br(Q)"
        },
    })
}

/// Smallest-effort power `m < n` with `S^m(X)` birational to `S^m(Y)`.
pub fn birational_sympow_exists(n: u64) -> Result<u64> {
    match n {
        0 | 1 => Err(Error::Domain(format!("degree {n} has nothing to compare"))),
        2 => Ok(1),
        _ => Ok(n - 1),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymPowDimensions {
    pub sym_power: u64,
    pub generalized: u64,
    pub projective_factor: u64,
}

/// Dimensions in `S^l(X) ~ X_l × P^{l(l−1)}` for a degree-`n` algebra.
pub fn sympow_dimension_model(n: u64, l: u64) -> Result<SymPowDimensions> {
    if l == 0 || l >= n {
        return Err(Error::OutOfRange(format!("power l = {l} outside 1..{n}")));
    }
    let dims = SymPowDimensions {
        sym_power: l * (n - 1),
        generalized: l * (n - l),
        projective_factor: l * (l - 1),
    };
    if dims.sym_power != dims.generalized + dims.projective_factor {
        return Err(Error::Internal("dimension count does not balance".into()));
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_examples() {
        assert_eq!(sympow_verdict(5, 3).unwrap().kind, SymPowKind::Birational);
        assert_eq!(sympow_verdict(5, 2).unwrap().kind, SymPowKind::StablyBirational);
        assert_eq!(sympow_verdict(4, 4).unwrap().kind, SymPowKind::Rational);
        assert!(sympow_verdict(4, 0).is_err());
        assert!(sympow_verdict(4, 5).is_err());
    }

    #[test]
    fn birational_power() {
        assert_eq!(birational_sympow_exists(3).unwrap(), 2);
        assert_eq!(birational_sympow_exists(2).unwrap(), 1);
        assert_eq!(birational_sympow_exists(10).unwrap(), 9);
        assert!(birational_sympow_exists(1).is_err());
    }

    #[test]
    fn dimension_examples() {
        let d = sympow_dimension_model(7, 1).unwrap();
        assert_eq!((d.sym_power, d.generalized, d.projective_factor), (6, 6, 0));
        let d = sympow_dimension_model(4, 2).unwrap();
        assert_eq!((d.sym_power, d.generalized, d.projective_factor), (6, 4, 2));
        let d = sympow_dimension_model(5, 4).unwrap();
        assert_eq!((d.sym_power, d.generalized, d.projective_factor), (16, 4, 12));
        assert!(sympow_dimension_model(4, 4).is_err());
    }
}
