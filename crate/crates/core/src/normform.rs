//! Reduced-norm polynomials of split, quaternion and matrix-over-quaternion
//! algebras, and pointwise smoothness of the norm hypersurface.
//!
//! Coordinates are taken in a fixed basis: matrix units `E_ij` in row-major
//! order for `M_n(ℚ)`, and `{1, i, j, ij}` per entry (entries row-major) for
//! `M_m((a, b))`. The quaternion `x₀ + x₁i + x₂j + x₃ij` is represented over
//! ℚ(√a) by `[[x₀ + x₁√a, x₂ + x₃√a], [b(x₂ − x₃√a), x₀ − x₁√a]]`; the
//! determinant of that representation has vanishing √a-part and its rational
//! part is the reduced norm.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::brauer::AlgebraSpec;
use crate::exactnum::{matrix_quad_det, poly_det, MultiPoly, QuadExt, Rational};
use crate::{max_degree, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormForm {
    pub algebra: AlgebraSpec,
    /// `dim_ℚ A`, the number of variables of `f`.
    pub m: usize,
    pub f: MultiPoly,
    pub basis_labels: Vec<String>,
}

impl NormForm {
    pub fn degree(&self) -> usize {
        self.algebra.degree()
    }

    /// Coordinates of the identity element.
    pub fn identity(&self) -> Vec<Rational> {
        identity_coords(&self.algebra, self.m)
    }
}

fn identity_coords(algebra: &AlgebraSpec, m: usize) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); m];
    match algebra {
        AlgebraSpec::Split { degree } => {
            for i in 0..*degree {
                x[i * degree + i] = Rational::one();
            }
        }
        AlgebraSpec::Quaternion { .. } => x[0] = Rational::one(),
        AlgebraSpec::MatrixOverQuaternion { m: size, .. } => {
            for r in 0..*size {
                x[4 * (r * size + r)] = Rational::one();
            }
        }
        AlgebraSpec::ByInvariants { .. } => {}
    }
    x
}

fn check_scale(n: usize) -> Result<()> {
    let cap = max_degree();
    if n == 0 || n > cap {
        return Err(Error::Scale(format!("matrix size {n} outside 1..={cap}")));
    }
    Ok(())
}

/// Determinant of the generic `n × n` matrix in `X1, ..., X_{n²}`.
pub fn norm_poly_split(n: usize) -> Result<NormForm> {
    check_scale(n)?;
    let vars = MultiPoly::indexed_vars("X", 1, n * n);
    let entries: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| (0..n).map(|j| MultiPoly::var(&vars, i * n + j)).collect())
        .collect();
    let f = poly_det(&entries)?;
    Ok(NormForm {
        algebra: AlgebraSpec::Split { degree: n },
        m: n * n,
        f,
        basis_labels: (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1)))
            .collect(),
    })
}

const QUATERNION_BASIS: [&str; 4] = ["1", "i", "j", "ij"];

/// 2×2 block of the quaternion with coordinates `vars[offset..offset + 4]`.
fn quaternion_block(vars: &[String], offset: usize, a: &Rational, b: &Rational) -> [[QuadExt; 2]; 2] {
    let x = |t: usize| MultiPoly::var(vars, offset + t);
    let q = |base: MultiPoly, surd: MultiPoly| QuadExt::new(base, surd, a.clone());
    [
        [q(x(0), x(1)), q(x(2), x(3))],
        [q(x(2).scale(b), (-&x(3)).scale(b)), q(x(0), -&x(1))],
    ]
}

fn quaternion_matrix_norm(a: &Rational, b: &Rational, size: usize) -> Result<MultiPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("quaternion algebra needs nonzero a, b".into()));
    }
    let nvars = 4 * size * size;
    let vars = MultiPoly::indexed_vars("X", 0, nvars);
    let dim = 2 * size;
    let zero = QuadExt::zero(&vars, a.clone());
    let mut big = vec![vec![zero; dim]; dim];
    for r in 0..size {
        for c in 0..size {
            let block = quaternion_block(&vars, 4 * (r * size + c), a, b);
            for (i, row) in block.into_iter().enumerate() {
                for (j, e) in row.into_iter().enumerate() {
                    big[2 * r + i][2 * c + j] = e;
                }
            }
        }
    }
    match a.rational_sqrt() {
        // ℚ(√a) = ℚ: the representation is already rational
        Some(root) => {
            let rational: Vec<Vec<MultiPoly>> = big
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| &e.base + &e.surd.scale(&root))
                        .collect()
                })
                .collect();
            poly_det(&rational)
        }
        None => {
            let det = matrix_quad_det(&big);
            if !det.surd.is_zero() {
                return Err(Error::Internal(format!(
                    "norm form over Q(sqrt({a})) has nonzero surd part {}",
                    det.surd
                )));
            }
            Ok(det.base)
        }
    }
}

fn quaternion_labels(size: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(4 * size * size);
    for r in 0..size {
        for c in 0..size {
            for t in QUATERNION_BASIS {
                if size == 1 {
                    out.push(t.to_string());
                } else {
                    out.push(format!("E{}{}*{t}", r + 1, c + 1));
                }
            }
        }
    }
    out
}

/// `X₀² − aX₁² − bX₂² + abX₃²`, computed as a determinant over ℚ(√a).
pub fn norm_poly_quaternion(a: &Rational, b: &Rational) -> Result<NormForm> {
    let f = quaternion_matrix_norm(a, b, 1)?;
    Ok(NormForm {
        algebra: AlgebraSpec::Quaternion {
            a: a.clone(),
            b: b.clone(),
        },
        m: 4,
        f,
        basis_labels: quaternion_labels(1),
    })
}

pub fn norm_poly_matrix_quaternion(a: &Rational, b: &Rational, m: usize) -> Result<NormForm> {
    if m == 0 || m > 3 {
        return Err(Error::Scale(format!("matrix size m = {m} outside 1..=3")));
    }
    check_scale(2 * m)?;
    let f = quaternion_matrix_norm(a, b, m)?;
    Ok(NormForm {
        algebra: AlgebraSpec::MatrixOverQuaternion {
            a: a.clone(),
            b: b.clone(),
            m,
        },
        m: 4 * m * m,
        f,
        basis_labels: quaternion_labels(m),
    })
}

pub fn norm_form(algebra: &AlgebraSpec) -> Result<NormForm> {
    match algebra {
        AlgebraSpec::Split { degree } => norm_poly_split(*degree),
        AlgebraSpec::Quaternion { a, b } => norm_poly_quaternion(a, b),
        AlgebraSpec::MatrixOverQuaternion { a, b, m } => norm_poly_matrix_quaternion(a, b, *m),
        AlgebraSpec::ByInvariants { .. } => Err(Error::Domain(
            "norm forms need a concrete split or quaternion presentation".into(),
        )),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmoothStatus {
    OnSmoothLocus,
    OnSingularLocus,
    OffHypersurface,
}

pub fn smooth_point_check(form: &NormForm, x: &[Rational]) -> Result<SmoothStatus> {
    if x.len() != form.m {
        return Err(Error::Shape(format!(
            "point has {} coordinates, algebra has dimension {}",
            x.len(),
            form.m
        )));
    }
    if !form.f.eval(x)?.is_zero() {
        return Ok(SmoothStatus::OffHypersurface);
    }
    for i in 0..form.m {
        if !form.f.partial(i).eval(x)?.is_zero() {
            return Ok(SmoothStatus::OnSmoothLocus);
        }
    }
    Ok(SmoothStatus::OnSingularLocus)
}

fn quaternion_mul(x: &[Rational], y: &[Rational], a: &Rational, b: &Rational) -> Vec<Rational> {
    let ab = a * b;
    vec![
        &(&(&x[0] * &y[0]) + &(a * &(&x[1] * &y[1]))) + &(&(b * &(&x[2] * &y[2])) - &(&ab * &(&x[3] * &y[3]))),
        &(&(&x[0] * &y[1]) + &(&x[1] * &y[0])) + &(b * &(&(&x[3] * &y[2]) - &(&x[2] * &y[3]))),
        &(&(&x[0] * &y[2]) + &(&x[2] * &y[0])) + &(a * &(&(&x[1] * &y[3]) - &(&x[3] * &y[1]))),
        &(&(&x[0] * &y[3]) + &(&x[3] * &y[0])) + &(&(&x[1] * &y[2]) - &(&x[2] * &y[1])),
    ]
}

/// Product of two elements given in the basis of [`NormForm`].
pub fn multiply_elements(algebra: &AlgebraSpec, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
    let dim = algebra.dimension();
    if x.len() != dim || y.len() != dim {
        return Err(Error::Shape(format!("elements must have {dim} coordinates")));
    }
    match algebra {
        AlgebraSpec::Split { degree: n } => {
            let n = *n;
            let mut out = vec![Rational::zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    out[i * n + j] = (0..n).map(|k| &x[i * n + k] * &y[k * n + j]).sum();
                }
            }
            Ok(out)
        }
        AlgebraSpec::Quaternion { a, b } => Ok(quaternion_mul(x, y, a, b)),
        AlgebraSpec::MatrixOverQuaternion { a, b, m } => {
            let m = *m;
            let entry = |v: &[Rational], r: usize, c: usize| v[4 * (r * m + c)..4 * (r * m + c) + 4].to_vec();
            let mut out = vec![Rational::zero(); 4 * m * m];
            for r in 0..m {
                for c in 0..m {
                    let mut acc = vec![Rational::zero(); 4];
                    for k in 0..m {
                        let p = quaternion_mul(&entry(x, r, k), &entry(y, k, c), a, b);
                        for (s, t) in acc.iter_mut().zip(&p) {
                            *s += t;
                        }
                    }
                    out[4 * (r * m + c)..4 * (r * m + c) + 4].clone_from_slice(&acc);
                }
            }
            Ok(out)
        }
        AlgebraSpec::ByInvariants { .. } => Err(Error::Domain(
            "multiplication needs a concrete split or quaternion presentation".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub gamma: Vec<Rational>,
    pub delta: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicativityReport {
    pub trials: usize,
    pub seed: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl MultiplicativityReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks `f(γδ) = f(γ) f(δ)` on random integer coordinates in `[-5, 5]`.
pub fn norm_multiplicativity_check(form: &NormForm, trials: usize, seed: u64) -> Result<MultiplicativityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || -> Vec<Rational> { (0..form.m).map(|_| Rational::from(rng.gen_range(-5i64..=5))).collect() };
    let mut counterexamples = Vec::new();
    for _ in 0..trials {
        let gamma = draw();
        let delta = draw();
        let prod = multiply_elements(&form.algebra, &gamma, &delta)?;
        let lhs = form.f.eval(&prod)?;
        let rhs = &form.f.eval(&gamma)? * &form.f.eval(&delta)?;
        if lhs != rhs {
            counterexamples.push(Counterexample { gamma, delta });
        }
    }
    Ok(MultiplicativityReport {
        trials,
        seed,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn split_small() {
        assert_eq!(norm_poly_split(1).unwrap().f.to_string(), "X1");
        assert_eq!(norm_poly_split(2).unwrap().f.to_string(), "X1*X4 - X2*X3");
        let f3 = norm_poly_split(3).unwrap();
        assert_eq!(f3.f.num_terms(), 6);
        assert_eq!(f3.f.homogeneous_degree(), Some(3));
        assert!(matches!(norm_poly_split(0), Err(Error::Scale(_))));
        assert!(matches!(norm_poly_split(7), Err(Error::Scale(_))));
    }

    #[test]
    fn hamilton_norm_is_sum_of_squares() {
        let f = norm_poly_quaternion(&q(-1), &q(-1)).unwrap();
        assert_eq!(f.f.to_string(), "X0^2 + X1^2 + X2^2 + X3^2");
        assert_eq!(f.f.eval(&f.identity()).unwrap(), q(1));
    }

    #[test]
    fn square_radicand_uses_rational_path() {
        let f = norm_poly_quaternion(&q(4), &q(3)).unwrap();
        assert_eq!(f.f.to_string(), "X0^2 - 4*X1^2 - 3*X2^2 + 12*X3^2");
    }

    #[test]
    fn matrix_over_quaternion_m1_matches() {
        let a = q(2);
        let b = q(-5);
        let f1 = norm_poly_matrix_quaternion(&a, &b, 1).unwrap();
        assert_eq!(f1.f, norm_poly_quaternion(&a, &b).unwrap().f);
        let f2 = norm_poly_matrix_quaternion(&q(-1), &q(-1), 2).unwrap();
        assert_eq!(f2.m, 16);
        assert_eq!(f2.f.homogeneous_degree(), Some(4));
        assert_eq!(f2.f.eval(&f2.identity()).unwrap(), q(1));
        assert!(matches!(norm_poly_matrix_quaternion(&a, &b, 4), Err(Error::Scale(_))));
    }

    #[test]
    fn smooth_examples() {
        let f2 = norm_poly_split(2).unwrap();
        assert_eq!(smooth_point_check(&f2, &ints(&[1, 0, 0, 0])).unwrap(), SmoothStatus::OnSmoothLocus);
        assert_eq!(smooth_point_check(&f2, &ints(&[0, 0, 0, 0])).unwrap(), SmoothStatus::OnSingularLocus);
        assert_eq!(smooth_point_check(&f2, &ints(&[1, 0, 0, 1])).unwrap(), SmoothStatus::OffHypersurface);
        let f3 = norm_poly_split(3).unwrap();
        let mut e11 = vec![q(0); 9];
        e11[0] = q(1);
        assert_eq!(smooth_point_check(&f3, &e11).unwrap(), SmoothStatus::OnSingularLocus);
        assert!(matches!(smooth_point_check(&f3, &ints(&[1])), Err(Error::Shape(_))));
    }

    #[test]
    fn multiplicativity_small() {
        for spec in [
            AlgebraSpec::Split { degree: 2 },
            AlgebraSpec::quaternion(-1, -1),
            AlgebraSpec::quaternion(3, -7),
        ] {
            let f = norm_form(&spec).unwrap();
            let r = norm_multiplicativity_check(&f, 20, 7).unwrap();
            assert!(r.passed(), "{spec:?}");
        }
    }

    #[test]
    fn identity_is_neutral() {
        let spec = AlgebraSpec::quaternion(2, 3);
        let one = identity_coords(&spec, 4);
        let x = ints(&[1, -2, 3, 4]);
        assert_eq!(multiply_elements(&spec, &one, &x).unwrap(), x);
        assert_eq!(multiply_elements(&spec, &x, &one).unwrap(), x);
    }

    #[test]
    fn by_invariants_has_no_norm_form() {
        let spec = AlgebraSpec::ByInvariants {
            class: crate::brauer::BrauerClass::trivial(),
            degree: 3,
        };
        assert!(norm_form(&spec).is_err());
    }
}
