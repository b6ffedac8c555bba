//! K₀ of Brauer–Severi varieties and the Chow-class expansion in terms of
//! AS-bundles.
//!
//! Throughout, `h` is the class of `O(−1)` in `K₀(Pⁿ)` after base change.
//! The bundle `W_j^∨` restricts to `ind(A^{⊗j}) · h^j`, so a class in
//! `K₀(X)` written in the basis `{[O_X], [W_j^∨]}` restricts to a polynomial
//! in `h`. Polynomials in `h` are [`MultiPoly`] values in the single
//! variable `h`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::brauer::BrauerClass;
use crate::exactnum::intmath::{binomial, is_prime};
use crate::exactnum::{MultiPoly, Rational};
use crate::{Error, Result};

fn h_vars() -> Vec<String> {
    vec!["h".to_string()]
}

/// `(h − 1)^i` expanded.
pub fn h_minus_one_pow(i: u32) -> MultiPoly {
    let v = h_vars();
    let base = &MultiPoly::var(&v, 0) - &MultiPoly::one(&v);
    base.pow(i)
}

fn h_pow(j: u32) -> MultiPoly {
    MultiPoly::var(&h_vars(), 0).pow(j)
}

/// Indecomposable absolutely split bundle `W_i` on the Brauer–Severi variety
/// of `class`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASBundle {
    pub twist: i64,
    pub rank: u64,
    pub class: BrauerClass,
}

impl ASBundle {
    pub fn new(class: &BrauerClass, twist: i64) -> Self {
        ASBundle {
            twist,
            rank: class.index_tensor_power(twist),
            class: class.clone(),
        }
    }
}

/// `W_i^∨ ≅ W_{−i}`.
pub fn as_dual(w: &ASBundle) -> ASBundle {
    ASBundle {
        twist: -w.twist,
        rank: w.rank,
        class: w.class.clone(),
    }
}

/// Additive generator `ind(A^{⊗l}) · h^l` of the image of `K₀(X) → K₀(Pⁿ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K0Generator {
    pub level: u64,
    pub rank: u64,
}

impl K0Generator {
    pub fn polynomial(&self) -> MultiPoly {
        h_pow(self.level as u32).scale(&Rational::from(self.rank as i64))
    }
}

pub fn k0_image_generators(class: &BrauerClass, degree: usize) -> Result<Vec<K0Generator>> {
    if degree == 0 || !(degree as u64).is_multiple_of(class.index()) {
        return Err(Error::InconsistentSpec(format!(
            "index {} does not divide degree {degree}",
            class.index()
        )));
    }
    Ok((0..degree as u64)
        .map(|l| K0Generator {
            level: l,
            rank: class.index_tensor_power(l as i64),
        })
        .collect())
}

/// Generator `r/gcd(i, r) · (h − 1)^i` of the image of `gr^i K₀(X)` for a
/// class with `ind = per = r`.
pub fn gr_generator(r: u64, i: u64) -> Result<(u64, MultiPoly)> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    Ok((r / i.gcd(&r), h_minus_one_pow(i as u32)))
}

/// Which coefficients a [`ChowExpansion`] carries on the `W_j^∨` terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `(−1)^{l−j} C(l, j)`, the coefficients of `p(h − 1)^l`.
    Alternating,
    /// `C(l, j)` on every `W_j^∨` term: the all-positive variant, kept for
    /// comparison.
    PrintedPositive,
}

/// Preimage of `p(h − 1)^l` in the basis `[O_Y], [W_1^∨], ..., [W_l^∨]` on a
/// Brauer–Severi variety of prime index `p`, up to the undetermined scale
/// `r_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowExpansion {
    pub p: u64,
    pub l: u64,
    pub convention: SignConvention,
    /// `coeffs[0]` multiplies `[O_Y]`, `coeffs[j]` multiplies `[W_j^∨]`.
    pub coeffs: BTreeMap<u64, BigInt>,
}

impl ChowExpansion {
    /// `Σ_j c_j · ind(D'^{⊗j}) · h^j`, with `ind(D'^{⊗0}) = 1` and
    /// `ind(D'^{⊗j}) = p` for `1 <= j <= l`.
    pub fn restriction(&self) -> MultiPoly {
        let v = h_vars();
        self.coeffs.iter().fold(MultiPoly::zero(&v), |acc, (&j, c)| {
            let ind = if j == 0 { 1 } else { self.p };
            let coeff = Rational::from(c * BigInt::from(ind));
            &acc + &h_pow(j as u32).scale(&coeff)
        })
    }

    pub fn target(&self) -> MultiPoly {
        h_minus_one_pow(self.l as u32).scale(&Rational::from(self.p as i64))
    }

    pub fn identity_holds(&self) -> bool {
        self.restriction() == self.target()
    }

    /// Human-readable right-hand side, e.g. `3*(h-1)^2`.
    pub fn check_string(&self) -> String {
        match self.l {
            0 => format!("{}", self.p),
            1 => format!("{}*(h-1)", self.p),
            l => format!("{}*(h-1)^{l}", self.p),
        }
    }

    /// Coefficient labels `O_Y`, `W1`, `W2`, ...
    pub fn labelled(&self) -> Vec<(String, BigInt)> {
        self.coeffs
            .iter()
            .map(|(&j, c)| {
                let label = if j == 0 { "O_Y".to_string() } else { format!("W{j}") };
                (label, c.clone())
            })
            .collect()
    }
}

pub fn chow_expansion(p: u64, l: u64) -> Result<ChowExpansion> {
    chow_expansion_with(p, l, SignConvention::Alternating)
}

pub fn chow_expansion_with(p: u64, l: u64, convention: SignConvention) -> Result<ChowExpansion> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if l >= p {
        return Err(Error::OutOfRange(format!("codimension {l} must be below p = {p}")));
    }
    let sign = |e: u64| if e.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let mut coeffs = BTreeMap::new();
    coeffs.insert(0, sign(l) * BigInt::from(p));
    for j in 1..=l {
        let c = match convention {
            SignConvention::Alternating => sign(l - j) * binomial(l, j),
            SignConvention::PrintedPositive => binomial(l, j),
        };
        if !c.is_zero() {
            coeffs.insert(j, c);
        }
    }
    Ok(ChowExpansion {
        p,
        l,
        convention,
        coeffs,
    })
}

/// Side-by-side comparison of the two sign conventions at `(p, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignDiscrepancy {
    pub alternating: ChowExpansion,
    pub printed: ChowExpansion,
    pub alternating_holds: bool,
    pub printed_holds: bool,
}

impl SignDiscrepancy {
    pub fn differs(&self) -> bool {
        self.alternating_holds != self.printed_holds
    }

    pub fn summary(&self) -> String {
        let fmt = |e: &ChowExpansion| {
            e.labelled()
                .iter()
                .map(|(k, c)| format!("{k}={c}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!(
            "p={} l={}: alternating [{}] {} {}; printed [{}] {} {}",
            self.alternating.p,
            self.alternating.l,
            fmt(&self.alternating),
            if self.alternating_holds { "restricts to" } else { "does not restrict to" },
            self.alternating.check_string(),
            fmt(&self.printed),
            if self.printed_holds { "restricts to" } else { "does not restrict to" },
            self.printed.check_string(),
        )
    }
}

pub fn sign_discrepancy(p: u64, l: u64) -> Result<SignDiscrepancy> {
    let alternating = chow_expansion_with(p, l, SignConvention::Alternating)?;
    let printed = chow_expansion_with(p, l, SignConvention::PrintedPositive)?;
    Ok(SignDiscrepancy {
        alternating_holds: alternating.identity_holds(),
        printed_holds: printed.identity_holds(),
        alternating,
        printed,
    })
}

/// `r_{dim Y} = Σ d_i` for a zero-dimensional intersection made of closed
/// points of residue degrees `d_i`.
pub fn zero_dim_coefficient(point_degrees: &[u64]) -> Result<u64> {
    if point_degrees.is_empty() {
        return Err(Error::Domain("intersection must contain at least one point".into()));
    }
    if point_degrees.contains(&0) {
        return Err(Error::Domain("residue degrees are positive".into()));
    }
    Ok(point_degrees.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(pairs: &[(&str, &str)]) -> BrauerClass {
        BrauerClass::from_strs(pairs).unwrap()
    }

    fn ranks(g: &[K0Generator]) -> Vec<u64> {
        g.iter().map(|x| x.rank).collect()
    }

    #[test]
    fn k0_examples() {
        assert_eq!(ranks(&k0_image_generators(&BrauerClass::trivial(), 3).unwrap()), vec![1, 1, 1]);
        let h = cls(&[("inf", "1/2"), ("2", "1/2")]);
        assert_eq!(ranks(&k0_image_generators(&h, 2).unwrap()), vec![1, 2]);
        let c3 = cls(&[("2", "1/3"), ("3", "2/3")]);
        assert_eq!(ranks(&k0_image_generators(&c3, 3).unwrap()), vec![1, 3, 3]);
        assert!(matches!(k0_image_generators(&c3, 4), Err(Error::InconsistentSpec(_))));
        assert_eq!(k0_image_generators(&h, 2).unwrap()[1].polynomial().to_string(), "2*h");
    }

    #[test]
    fn gr_examples() {
        let (c, p) = gr_generator(7, 0).unwrap();
        assert_eq!((c, p.to_string()), (1, "1".to_string()));
        let (c, p) = gr_generator(4, 2).unwrap();
        assert_eq!((c, p.to_string()), (2, "h^2 - 2*h + 1".to_string()));
        for i in 1..5 {
            assert_eq!(gr_generator(5, i).unwrap().0, 5);
        }
    }

    #[test]
    fn chow_examples() {
        let e = chow_expansion(3, 0).unwrap();
        assert_eq!(e.labelled(), vec![("O_Y".to_string(), BigInt::from(3))]);
        assert!(e.identity_holds());

        let e = chow_expansion(3, 1).unwrap();
        assert_eq!(e.coeffs[&0], BigInt::from(-3));
        assert_eq!(e.coeffs[&1], BigInt::from(1));
        assert_eq!(e.restriction().to_string(), "3*h - 3");
        assert!(e.identity_holds());

        let e = chow_expansion(3, 2).unwrap();
        let got: Vec<i64> = e.coeffs.values().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(got, vec![3, -2, 1]);
        assert_eq!(e.restriction().to_string(), "3*h^2 - 6*h + 3");
        assert!(e.identity_holds());
        assert_eq!(e.check_string(), "3*(h-1)^2");

        assert!(matches!(chow_expansion(3, 3), Err(Error::OutOfRange(_))));
        assert!(chow_expansion(4, 1).is_err());
    }

    #[test]
    fn printed_signs_agree_only_in_low_codimension() {
        let d = sign_discrepancy(3, 1).unwrap();
        assert!(d.alternating_holds && d.printed_holds);
        let d = sign_discrepancy(3, 2).unwrap();
        assert!(d.alternating_holds);
        assert!(!d.printed_holds);
        assert!(d.differs());
    }

    #[test]
    fn dual_bundles() {
        let h = cls(&[("inf", "1/2"), ("2", "1/2")]);
        let w0 = ASBundle::new(&h, 0);
        assert_eq!(w0.rank, 1);
        assert_eq!(as_dual(&w0), w0);
        let w1 = ASBundle::new(&h, 1);
        let d = as_dual(&w1);
        assert_eq!((d.twist, d.rank), (-1, 2));
        assert_eq!(d, ASBundle::new(&h, -1));
    }

    #[test]
    fn zero_dim() {
        assert_eq!(zero_dim_coefficient(&[1]).unwrap(), 1);
        assert_eq!(zero_dim_coefficient(&[2, 3]).unwrap(), 5);
        assert_eq!(zero_dim_coefficient(&[7]).unwrap(), 7);
        assert!(zero_dim_coefficient(&[]).is_err());
    }
}
