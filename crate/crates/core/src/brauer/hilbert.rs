use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::{BrauerClass, Place};
use crate::exactnum::intmath::{legendre, prime_divisors, split_valuation};
use crate::exactnum::{Rational, QZ};
use crate::{Error, Result};

/// Integer in the same square class as `r` (num · den).
fn square_class_rep(r: &Rational) -> BigInt {
    r.numer() * r.denom()
}

/// Hilbert symbol `(a, b)_v`: +1 iff the quaternion algebra `(a, b)` splits
/// over the completion of ℚ at `v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("Hilbert symbol needs nonzero entries".into()));
    }
    let a = square_class_rep(a);
    let b = square_class_rep(b);
    Ok(match *v {
        Place::RealInfinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let (alpha, u) = split_valuation(&a, 2);
            let (beta, w) = split_valuation(&b, 2);
            let u8_ = u.mod_floor(&BigInt::from(8)).to_u64().expect("small");
            let w8 = w.mod_floor(&BigInt::from(8)).to_u64().expect("small");
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u8_) * eps(w8) + alpha as u64 * omega(w8) + beta as u64 * omega(u8_);
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            let (alpha, u) = split_valuation(&a, p);
            let (beta, w) = split_valuation(&b, p);
            let mut sign = 1i8;
            if (alpha as u64 * beta as u64 * ((p - 1) / 2)) % 2 == 1 {
                sign = -sign;
            }
            if beta % 2 == 1 {
                sign *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                sign *= legendre(&w, p);
            }
            sign
        }
    })
}

/// Brauer class of the quaternion algebra `(a, b)_ℚ`.
pub fn quaternion_class(a: &Rational, b: &Rational) -> Result<BrauerClass> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("quaternion algebra needs nonzero a, b".into()));
    }
    let mut places = BTreeSet::from([Place::RealInfinite, Place::Finite(2)]);
    for n in [a.numer(), a.denom(), b.numer(), b.denom()] {
        for p in prime_divisors(n)? {
            places.insert(Place::Finite(p));
        }
    }
    let mut pairs = Vec::new();
    for v in places {
        if hilbert_symbol(a, b, &v)? == -1 {
            pairs.push((v, QZ::half()));
        }
    }
    BrauerClass::new(pairs).map_err(|e| Error::Internal(format!("reciprocity failed for ({a}, {b}): {e}")))
}
