use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Place;
use crate::exactnum::{Rational, QZ};
use crate::{Error, Result};

/// Element of Br(ℚ) as its vector of local invariants.
///
/// Zero invariants are never stored, the real invariant is 0 or 1/2 and
/// the invariants sum to zero in ℚ/ℤ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BrauerClass {
    invariants: BTreeMap<Place, QZ>,
}

impl BrauerClass {
    pub fn trivial() -> Self {
        BrauerClass::default()
    }

    /// Validates and builds a class from `(place, invariant)` pairs. A place
    /// listed twice is an error.
    pub fn new(pairs: impl IntoIterator<Item = (Place, QZ)>) -> Result<Self> {
        let mut invariants = BTreeMap::new();
        for (place, inv) in pairs {
            if invariants.insert(place, inv).is_some() {
                return Err(Error::Domain(format!("place {place} listed twice")));
            }
        }
        invariants.retain(|_, v: &mut QZ| !v.is_zero());
        if let Some(real) = invariants.get(&Place::RealInfinite) {
            if real != &QZ::half() {
                return Err(Error::Domain(format!(
                    "real invariant must be 0 or 1/2, got {real}"
                )));
            }
        }
        let class = BrauerClass { invariants };
        let total = class.invariant_sum();
        if !total.is_zero() {
            return Err(Error::Domain(format!(
                "invariants sum to {total}, violating reciprocity"
            )));
        }
        Ok(class)
    }

    /// Shorthand for tests and examples: `&[("inf", "1/2"), ("2", "1/2")]`.
    pub fn from_strs(pairs: &[(&str, &str)]) -> Result<Self> {
        let parsed = pairs
            .iter()
            .map(|(p, v)| Ok((p.parse::<Place>()?, QZ::try_from(*v)?)))
            .collect::<Result<Vec<_>>>()?;
        BrauerClass::new(parsed)
    }

    pub fn invariants(&self) -> &BTreeMap<Place, QZ> {
        &self.invariants
    }

    pub fn invariant_at(&self, place: &Place) -> QZ {
        self.invariants.get(place).cloned().unwrap_or_default()
    }

    pub fn invariant_sum(&self) -> QZ {
        self.invariants
            .values()
            .fold(QZ::zero(), |acc, x| &acc + x)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.invariants.keys()
    }

    /// Class of the opposite algebra.
    pub fn opposite(&self) -> Self {
        self.power(-1)
    }

    /// `l`-fold tensor power; negative exponents use the opposite class.
    pub fn power(&self, l: i64) -> Self {
        let invariants = self
            .invariants
            .iter()
            .map(|(p, v)| (*p, v.times(l)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        BrauerClass { invariants }
    }

    pub fn tensor(&self, other: &BrauerClass) -> Self {
        let mut invariants = self.invariants.clone();
        for (p, v) in &other.invariants {
            let sum = &invariants.get(p).cloned().unwrap_or_default() + v;
            if sum.is_zero() {
                invariants.remove(p);
            } else {
                invariants.insert(*p, sum);
            }
        }
        BrauerClass { invariants }
    }

    pub fn period(&self) -> u64 {
        self.invariants
            .values()
            .fold(1u64, |acc, v| acc.lcm(&v.order()))
    }

    /// Index over ℚ, which coincides with the period for number fields.
    pub fn index(&self) -> u64 {
        self.period()
    }

    /// Index of `A^{⊗l}`: `per/gcd(l, per)`, and 1 for `l = 0`.
    pub fn index_tensor_power(&self, l: i64) -> u64 {
        let per = self.period();
        per / per.gcd(&l.unsigned_abs())
    }
}

pub fn tensor(a: &BrauerClass, b: &BrauerClass) -> BrauerClass {
    a.tensor(b)
}

pub fn period(a: &BrauerClass) -> u64 {
    a.period()
}

pub fn index(a: &BrauerClass) -> u64 {
    a.index()
}

pub fn index_tensor_power(a: &BrauerClass, l: i64) -> u64 {
    a.index_tensor_power(l)
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .invariants
            .iter()
            .map(|(p, v)| format!("{p}:{v}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BrauerClass{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    invariants: Vec<(String, Rational)>,
}

impl Serialize for BrauerClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassJson {
            invariants: self
                .invariants
                .iter()
                .map(|(p, v)| (p.to_string(), v.value().clone()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ClassJson::deserialize(d)?;
        let pairs = raw
            .invariants
            .into_iter()
            .map(|(p, v)| Ok((p.parse::<Place>()?, QZ::new(&v))))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        BrauerClass::new(pairs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(pairs: &[(&str, &str)]) -> BrauerClass {
        BrauerClass::from_strs(pairs).unwrap()
    }

    #[test]
    fn validation() {
        assert!(BrauerClass::from_strs(&[("2", "1/2")]).is_err());
        assert!(BrauerClass::from_strs(&[("inf", "1/3"), ("2", "2/3")]).is_err());
        assert!(BrauerClass::from_strs(&[("4", "1/2"), ("2", "1/2")]).is_err());
        assert!(BrauerClass::from_strs(&[("2", "1/2"), ("2", "1/2")]).is_err());
        let c = cls(&[("2", "0"), ("3", "1")]);
        assert!(c.is_trivial());
    }

    #[test]
    fn tensor_examples() {
        let a = cls(&[("inf", "1/2"), ("2", "1/2")]);
        assert_eq!(a.tensor(&BrauerClass::trivial()), a);
        assert!(a.tensor(&a).is_trivial());
        let b = cls(&[("2", "1/3"), ("3", "2/3")]);
        assert_eq!(b.tensor(&b), cls(&[("2", "2/3"), ("3", "1/3")]));
        assert!(b.tensor(&b.opposite()).is_trivial());
    }

    #[test]
    fn period_and_index() {
        assert_eq!(BrauerClass::trivial().period(), 1);
        assert_eq!(cls(&[("inf", "1/2"), ("2", "1/2")]).period(), 2);
        assert_eq!(cls(&[("2", "1/4"), ("3", "3/4")]).period(), 4);
        assert_eq!(cls(&[("2", "1/6"), ("3", "5/6")]).index(), 6);
        assert_eq!(BrauerClass::trivial().index(), 1);
    }

    #[test]
    fn index_of_powers() {
        let a = cls(&[("2", "1/4"), ("3", "3/4")]);
        assert_eq!(a.index_tensor_power(0), 1);
        assert_eq!(a.index_tensor_power(2), 2);
        assert_eq!(a.index_tensor_power(-1), 4);
        let p5 = cls(&[("2", "1/5"), ("7", "4/5")]);
        for l in 1..5 {
            assert_eq!(p5.index_tensor_power(l), 5);
        }
    }

    #[test]
    fn json_shape() {
        let a = cls(&[("inf", "1/2"), ("2", "1/2")]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"invariants":[["inf","1/2"],["2","1/2"]]}"#);
        let back: BrauerClass = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<BrauerClass>(r#"{"invariants":[["2","1/2"]]}"#).is_err());
    }
}
