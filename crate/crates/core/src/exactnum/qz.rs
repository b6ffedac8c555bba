use std::fmt;
use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::{Error, Result};

/// Element of ℚ/ℤ, stored as its representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QZ(Rational);

impl QZ {
    pub fn new(r: &Rational) -> Self {
        QZ(r.fract_unit())
    }

    pub fn from_fraction(numer: i64, denom: i64) -> Result<Self> {
        Ok(QZ::new(&Rational::new(numer, denom)?))
    }

    pub fn zero() -> Self {
        QZ(Rational::zero())
    }

    pub fn half() -> Self {
        QZ(Rational::new(1, 2).expect("nonzero"))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Additive order, which is the reduced denominator.
    pub fn order(&self) -> u64 {
        self.0
            .denom()
            .to_u64()
            .expect("invariant orders are desk-scale")
    }

    pub fn order_big(&self) -> BigInt {
        self.0.denom().clone()
    }

    /// `n · x` in ℚ/ℤ; negative multiples are allowed.
    pub fn times(&self, n: i64) -> QZ {
        QZ::new(&(&self.0 * &Rational::from(n)))
    }

    pub fn times_big(&self, n: &BigInt) -> QZ {
        QZ::new(&(&self.0 * &Rational::from(n.clone())))
    }
}

impl Add for &QZ {
    type Output = QZ;
    fn add(self, rhs: &QZ) -> QZ {
        QZ::new(&(&self.0 + &rhs.0))
    }
}

impl Neg for &QZ {
    type Output = QZ;
    fn neg(self) -> QZ {
        QZ::new(&-&self.0)
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QZ({})", self.0)
    }
}

impl Serialize for QZ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QZ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(QZ::new(&Rational::deserialize(d)?))
    }
}

impl TryFrom<&str> for QZ {
    type Error = Error;
    fn try_from(s: &str) -> Result<QZ> {
        Ok(QZ::new(&s.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_into_unit_interval() {
        let x = QZ::new(&Rational::new(7, 3).unwrap());
        assert_eq!(x.to_string(), "1/3");
        assert_eq!(x.order(), 3);
        let y = QZ::new(&Rational::new(-1, 4).unwrap());
        assert_eq!(y.to_string(), "3/4");
        assert_eq!(QZ::new(&Rational::from(5)).order(), 1);
    }

    #[test]
    fn multiples() {
        let x = QZ::from_fraction(1, 6).unwrap();
        assert_eq!(x.times(6), QZ::zero());
        assert_eq!(x.times(-1).to_string(), "5/6");
        assert_eq!((&x + &x).to_string(), "1/3");
    }
}
