use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::{BrauerClass, Place};
use crate::exactnum::intmath::{is_square_free, legendre};
use crate::exactnum::QZ;
use crate::{Error, Result};

/// How a place of ℚ behaves in ℚ(√d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LocalBehaviour {
    /// Two places above, each with local degree 1 (two real places at ∞).
    Split,
    Inert,
    Ramified,
    /// The real place becomes one complex place.
    Complex,
}

impl LocalBehaviour {
    pub fn local_degree(&self) -> i64 {
        match self {
            LocalBehaviour::Split => 1,
            _ => 2,
        }
    }

    fn label(&self) -> &'static str {
        match self {
            LocalBehaviour::Split => "split",
            LocalBehaviour::Inert => "inert",
            LocalBehaviour::Ramified => "ramified",
            LocalBehaviour::Complex => "complex",
        }
    }
}

/// Decomposition of `v` in ℚ(√d) for square-free `d ∉ {0, 1}`.
pub fn decomposition(d: i64, v: &Place) -> LocalBehaviour {
    match *v {
        Place::RealInfinite => {
            if d > 0 {
                LocalBehaviour::Split
            } else {
                LocalBehaviour::Complex
            }
        }
        Place::Finite(2) => match d.rem_euclid(8) {
            1 => LocalBehaviour::Split,
            5 => LocalBehaviour::Inert,
            _ => LocalBehaviour::Ramified,
        },
        Place::Finite(p) => {
            if d.rem_euclid(p as i64) == 0 {
                LocalBehaviour::Ramified
            } else if legendre(&BigInt::from(d), p) == 1 {
                LocalBehaviour::Split
            } else {
                LocalBehaviour::Inert
            }
        }
    }
}

/// A place of ℚ(√d): the place below, its behaviour, and which of the two
/// places it is when `v` splits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtPlace {
    pub below: Place,
    pub behaviour: LocalBehaviour,
    pub branch: u8,
}

impl fmt::Display for ExtPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.behaviour {
            LocalBehaviour::Split => write!(f, "{}:split:{}", self.below, self.branch),
            b => write!(f, "{}:{}", self.below, b.label()),
        }
    }
}

impl Serialize for ExtPlace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Invariants of `A ⊗ ℚ(√d)`, zero invariants omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedClass {
    pub d: i64,
    pub invariants: Vec<(ExtPlace, QZ)>,
}

impl RestrictedClass {
    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn period(&self) -> u64 {
        self.invariants
            .iter()
            .fold(1u64, |acc, (_, v)| acc.lcm(&v.order()))
    }

    /// Index over ℚ(√d), again equal to the period.
    pub fn index(&self) -> u64 {
        self.period()
    }
}

pub fn restrict_quadratic(a: &BrauerClass, d: i64) -> Result<RestrictedClass> {
    if d == 0 || d == 1 || !is_square_free(d) {
        return Err(Error::Domain(format!(
            "{d} is not a square-free integer other than 0 and 1"
        )));
    }
    let mut invariants = Vec::new();
    for (v, inv) in a.invariants() {
        let behaviour = decomposition(d, v);
        let local = inv.times(behaviour.local_degree());
        let branches: &[u8] = if behaviour == LocalBehaviour::Split { &[0, 1] } else { &[0] };
        if local.is_zero() {
            continue;
        }
        for &branch in branches {
            invariants.push((
                ExtPlace {
                    below: *v,
                    behaviour,
                    branch,
                },
                local.clone(),
            ));
        }
    }
    Ok(RestrictedClass { d, invariants })
}

/// `L` is a 1/m-splitting field for `B` iff `ind(B ⊗ L)` divides `m`.
pub fn is_fractional_splitting(restricted_index: u64, m: u64) -> Result<bool> {
    if m == 0 || restricted_index == 0 {
        return Err(Error::Domain("index and m must be positive".into()));
    }
    Ok(m.is_multiple_of(restricted_index))
}
