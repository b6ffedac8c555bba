use serde::{Deserialize, Serialize};

use super::{quaternion_class, BrauerClass};
use crate::exactnum::Rational;
use crate::{Error, Result};

/// Concrete description of a central simple ℚ-algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraSpec {
    /// `M_n(ℚ)`.
    Split {
        #[serde(deserialize_with = "crate::wire::count")]
        degree: usize,
    },
    /// `(a, b)_ℚ`, generated by `i, j` with `i² = a`, `j² = b`, `ij = −ji`.
    Quaternion { a: Rational, b: Rational },
    /// `M_m((a, b)_ℚ)`.
    MatrixOverQuaternion {
        a: Rational,
        b: Rational,
        #[serde(deserialize_with = "crate::wire::count")]
        m: usize,
    },
    /// Any algebra of the given degree in the given class.
    ByInvariants {
        class: BrauerClass,
        #[serde(deserialize_with = "crate::wire::count")]
        degree: usize,
    },
}

impl AlgebraSpec {
    pub fn quaternion(a: i64, b: i64) -> Self {
        AlgebraSpec::Quaternion {
            a: Rational::from(a),
            b: Rational::from(b),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            AlgebraSpec::Split { degree } | AlgebraSpec::ByInvariants { degree, .. } => *degree,
            AlgebraSpec::Quaternion { .. } => 2,
            AlgebraSpec::MatrixOverQuaternion { m, .. } => 2 * m,
        }
    }

    /// Checks the structural invariants and returns the Brauer class.
    pub fn class(&self) -> Result<BrauerClass> {
        let class = match self {
            AlgebraSpec::Split { .. } => BrauerClass::trivial(),
            AlgebraSpec::Quaternion { a, b } | AlgebraSpec::MatrixOverQuaternion { a, b, .. } => {
                quaternion_class(a, b)?
            }
            AlgebraSpec::ByInvariants { class, .. } => class.clone(),
        };
        let degree = self.degree();
        if degree == 0 {
            return Err(Error::InconsistentSpec("degree must be at least 1".into()));
        }
        if !(degree as u64).is_multiple_of(class.index()) {
            return Err(Error::InconsistentSpec(format!(
                "index {} does not divide degree {degree}",
                class.index()
            )));
        }
        Ok(class)
    }

    /// `dim_ℚ A = deg(A)²`.
    pub fn dimension(&self) -> usize {
        self.degree() * self.degree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_and_classes() {
        let h = AlgebraSpec::quaternion(-1, -1);
        assert_eq!(h.degree(), 2);
        assert_eq!(h.class().unwrap().period(), 2);
        let m2 = AlgebraSpec::MatrixOverQuaternion {
            a: Rational::from(-1),
            b: Rational::from(-1),
            m: 2,
        };
        assert_eq!(m2.degree(), 4);
        assert_eq!(m2.dimension(), 16);
        assert!(AlgebraSpec::Split { degree: 0 }.class().is_err());
    }

    #[test]
    fn by_invariants_checks_divisibility() {
        let c = BrauerClass::from_strs(&[("2", "1/3"), ("3", "2/3")]).unwrap();
        let bad = AlgebraSpec::ByInvariants { class: c.clone(), degree: 4 };
        assert!(matches!(bad.class(), Err(Error::InconsistentSpec(_))));
        let good = AlgebraSpec::ByInvariants { class: c, degree: 6 };
        assert!(good.class().is_ok());
    }

    #[test]
    fn json_forms() {
        let h: AlgebraSpec = serde_json::from_str(r#"{"kind":"quaternion","a":"-1","b":"-1"}"#).unwrap();
        assert_eq!(h, AlgebraSpec::quaternion(-1, -1));
        let s: AlgebraSpec = serde_json::from_str(r#"{"kind":"split","degree":"3"}"#).unwrap();
        assert_eq!(s, AlgebraSpec::Split { degree: 3 });
        let s: AlgebraSpec = serde_json::from_str(r#"{"kind":"split","degree":3}"#).unwrap();
        assert_eq!(s.degree(), 3);
        assert!(serde_json::from_str::<AlgebraSpec>(r#"{"kind":"cyclic"}"#).is_err());
    }
}
