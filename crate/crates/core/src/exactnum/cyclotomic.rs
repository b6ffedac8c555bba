use std::fmt;
use std::sync::Arc;

use super::intmath::{gcd_u64, totient};
use super::Rational;
use crate::{Error, Result};

/// ℚ(ζ_N) in the power basis `1, ζ, ..., ζ^{φ(N)-1}`.
#[derive(PartialEq, Eq)]
pub struct CyclotomicField {
    conductor: u64,
    phi: usize,
    /// Coefficients of Φ_N, constant term first; monic of degree φ(N).
    modulus: Vec<Rational>,
    /// `powers[m]` is ζ^m reduced, for `0 <= m < max(N, 2φ - 1)`.
    powers: Vec<Vec<Rational>>,
}

fn poly_divide_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            let delta = &c * d;
            rem[k + i] -= &delta;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Rational::is_zero));
    quot
}

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
pub(crate) fn cyclotomic_polynomial(n: u64) -> Vec<Rational> {
    let mut xn1 = vec![Rational::zero(); n as usize + 1];
    xn1[0] = Rational::from(-1);
    xn1[n as usize] = Rational::one();
    let mut p = xn1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_divide_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl CyclotomicField {
    pub fn new(conductor: u64) -> Result<Arc<Self>> {
        if conductor == 0 {
            return Err(Error::Domain("conductor must be positive".into()));
        }
        let phi = totient(conductor) as usize;
        let modulus = cyclotomic_polynomial(conductor);
        let count = (conductor as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![Rational::zero(); phi];
        cur[0] = Rational::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by ζ and reduce by the monic modulus
            let top = cur[phi - 1].clone();
            let mut next = vec![Rational::zero(); phi];
            next[1..phi].clone_from_slice(&cur[..phi - 1]);
            if !top.is_zero() {
                for (i, c) in next.iter_mut().enumerate() {
                    *c -= &(&top * &modulus[i]);
                }
            }
            cur = next;
        }
        Ok(Arc::new(CyclotomicField {
            conductor,
            phi,
            modulus,
            powers,
        }))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    /// Representatives of (ℤ/N)^× in `0..N`.
    pub fn units(&self) -> Vec<u64> {
        (0..self.conductor)
            .filter(|&a| gcd_u64(a, self.conductor) == 1)
            .collect()
    }

    pub fn constant(self: &Arc<Self>, c: Rational) -> CycElem {
        let mut coeffs = vec![Rational::zero(); self.phi];
        coeffs[0] = c;
        CycElem {
            field: Arc::clone(self),
            coeffs,
        }
    }

    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CycElem {
        let m = k.rem_euclid(self.conductor as i64) as usize;
        CycElem {
            field: Arc::clone(self),
            coeffs: self.powers[m].clone(),
        }
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<Rational>) -> Result<CycElem> {
        if coeffs.len() != self.phi {
            return Err(Error::Shape(format!(
                "{} coefficients for a field of degree {}",
                coeffs.len(),
                self.phi
            )));
        }
        Ok(CycElem {
            field: Arc::clone(self),
            coeffs,
        })
    }

    fn reduce(self: &Arc<Self>, raw: &[Rational]) -> CycElem {
        let mut coeffs = vec![Rational::zero(); self.phi];
        for (m, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, p) in coeffs.iter_mut().zip(&self.powers[m]) {
                if !p.is_zero() {
                    *slot += &(c * p);
                }
            }
        }
        CycElem {
            field: Arc::clone(self),
            coeffs,
        }
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.conductor)
    }
}

/// Element of ℚ(ζ_N), always in reduced power-basis form.
#[derive(Clone)]
pub struct CycElem {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CycElem {}

impl CycElem {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    fn check(&self, other: &CycElem) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "elements of different cyclotomic fields"
        );
    }

    pub fn add(&self, other: &CycElem) -> CycElem {
        self.check(other);
        CycElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CycElem) -> CycElem {
        self.check(other);
        CycElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycElem) -> CycElem {
        self.check(other);
        let phi = self.field.phi;
        let mut raw = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += &(a * b);
                }
            }
        }
        self.field.reduce(&raw)
    }

    pub fn pow(&self, e: u32) -> CycElem {
        let mut acc = self.field.constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Image under the automorphism ζ ↦ ζ^a.
    pub fn apply_galois(&self, a: i64) -> Result<CycElem> {
        let n = self.field.conductor;
        let ar = a.rem_euclid(n as i64) as u64;
        if gcd_u64(ar, n) != 1 {
            return Err(Error::NotAnAutomorphism { a, conductor: n });
        }
        let mut raw = vec![Rational::zero(); n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let target = ((k as u64 * ar) % n) as usize;
                raw[target] += c;
            }
        }
        Ok(self.field.reduce(&raw))
    }

    /// Multiplicative inverse, by solving the regular-representation system.
    pub fn inverse(&self) -> Result<CycElem> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let phi = self.field.phi;
        // column k = coordinates of self · ζ^k
        let cols: Vec<Vec<Rational>> = (0..phi)
            .map(|k| self.mul(&self.field.zeta_pow(k as i64)).coeffs)
            .collect();
        let mut aug: Vec<Vec<Rational>> = (0..phi)
            .map(|r| {
                let mut row: Vec<Rational> = (0..phi).map(|k| cols[k][r].clone()).collect();
                row.push(if r == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let pivot = (col..phi)
                .find(|&r| !aug[r][col].is_zero())
                .ok_or_else(|| Error::Internal("singular multiplication matrix".into()))?;
            aug.swap(col, pivot);
            let inv = aug[col][col].recip()?;
            for c in col..=phi {
                aug[col][c] *= &inv;
            }
            for r in 0..phi {
                if r != col && !aug[r][col].is_zero() {
                    let factor = aug[r][col].clone();
                    for c in col..=phi {
                        let delta = &factor * &aug[col][c];
                        aug[r][c] -= &delta;
                    }
                }
            }
        }
        self.field.from_coeffs(aug.into_iter().map(|row| row[phi].clone()).collect())
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "z")?,
                _ => write!(f, "{mag}*z")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem[N={}]({})", self.field.conductor, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(5), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn galois_on_zeta4() {
        let f = CyclotomicField::new(4).unwrap();
        let z = f.zeta_pow(1);
        assert_eq!(z.apply_galois(3).unwrap(), z.neg());
        assert_eq!(z.apply_galois(1).unwrap(), z);
        assert!(matches!(z.apply_galois(2), Err(Error::NotAnAutomorphism { .. })));
    }

    #[test]
    fn rational_constants_are_fixed() {
        let f = CyclotomicField::new(9).unwrap();
        let c = f.constant(Rational::new(-5, 3).unwrap());
        for a in f.units() {
            assert_eq!(c.apply_galois(a as i64).unwrap(), c);
        }
    }

    #[test]
    fn zeta_has_order_n() {
        for n in 1..=20 {
            let f = CyclotomicField::new(n).unwrap();
            let z = f.zeta_pow(1);
            assert_eq!(z.pow(n as u32), f.constant(Rational::one()), "N = {n}");
        }
    }

    #[test]
    fn units_of_small_conductors() {
        assert_eq!(CyclotomicField::new(1).unwrap().units(), vec![0]);
        assert_eq!(CyclotomicField::new(5).unwrap().units(), vec![1, 2, 3, 4]);
        assert_eq!(CyclotomicField::new(12).unwrap().units(), vec![1, 5, 7, 11]);
    }

    #[test]
    fn inverse_round_trip() {
        let f = CyclotomicField::new(7).unwrap();
        let x = f.zeta_pow(1).add(&f.constant(Rational::from(2)));
        let y = x.inverse().unwrap();
        assert_eq!(x.mul(&y), f.constant(Rational::one()));
        assert!(f.constant(Rational::zero()).inverse().is_err());
    }
}
