use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{MultiPoly, Rational};

/// `base + surd·√radicand` with polynomial parts; the radicand is a fixed
/// nonsquare rational shared by both operands of every operation.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadExt {
    pub base: MultiPoly,
    pub surd: MultiPoly,
    pub radicand: Rational,
}

impl QuadExt {
    pub fn new(base: MultiPoly, surd: MultiPoly, radicand: Rational) -> Self {
        assert_eq!(base.vars(), surd.vars(), "parts over different variables");
        QuadExt { base, surd, radicand }
    }

    pub fn from_base(base: MultiPoly, radicand: Rational) -> Self {
        let surd = MultiPoly::zero(base.vars());
        QuadExt { base, surd, radicand }
    }

    pub fn zero(vars: &[String], radicand: Rational) -> Self {
        QuadExt::from_base(MultiPoly::zero(vars), radicand)
    }

    pub fn conjugate(&self) -> QuadExt {
        QuadExt {
            base: self.base.clone(),
            surd: -&self.surd,
            radicand: self.radicand.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.surd.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> QuadExt {
        QuadExt {
            base: self.base.scale(c),
            surd: self.surd.scale(c),
            radicand: self.radicand.clone(),
        }
    }

    fn check(&self, other: &QuadExt) {
        assert_eq!(self.radicand, other.radicand, "mixed quadratic extensions");
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.check(rhs);
        QuadExt {
            base: &self.base + &rhs.base,
            surd: &self.surd + &rhs.surd,
            radicand: self.radicand.clone(),
        }
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.check(rhs);
        QuadExt {
            base: &self.base - &rhs.base,
            surd: &self.surd - &rhs.surd,
            radicand: self.radicand.clone(),
        }
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.check(rhs);
        let surd_sq = (&self.surd * &rhs.surd).scale(&self.radicand);
        QuadExt {
            base: &(&self.base * &rhs.base) + &surd_sq,
            surd: &(&self.base * &rhs.surd) + &(&self.surd * &rhs.base),
            radicand: self.radicand.clone(),
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            base: -&self.base,
            surd: -&self.surd,
            radicand: self.radicand.clone(),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*sqrt({})", self.base, self.surd, self.radicand)
    }
}
