use brauer_calc::brauer::{
    hilbert_symbol, restrict_quadratic, same_cyclic_subgroup, AlgebraSpec, BrauerClass, Place,
};
use brauer_calc::exactnum::{poly_det, CyclotomicField, MultiPoly, QuadExt, Rational, QZ};
use brauer_calc::normform::{norm_form, norm_poly_split, smooth_point_check, SmoothStatus};
use proptest::prelude::*;

fn vars3() -> Vec<String> {
    vec!["x".into(), "y".into(), "z".into()]
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_int() -> impl Strategy<Value = i64> {
    prop_oneof![-200i64..=-1, 1i64..=200]
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), rational()), 0..5)
        .prop_map(|terms| MultiPoly::from_terms(&vars3(), terms).unwrap())
}

fn place() -> impl Strategy<Value = Place> {
    prop::sample::select(vec![0u64, 2, 3, 5, 7, 11]).prop_map(|p| {
        if p == 0 {
            Place::RealInfinite
        } else {
            Place::finite(p).unwrap()
        }
    })
}

/// Random class: invariants on up to four finite places, one of which
/// balances the sum, with an optional real invariant 1/2.
fn class() -> impl Strategy<Value = BrauerClass> {
    (1i64..=12, prop::collection::vec(0i64..12, 3), any::<bool>()).prop_map(|(n, ks, real)| {
        let primes = [2u64, 3, 5, 7];
        let half = real && n % 2 == 0;
        let mut pairs: Vec<(Place, QZ)> = Vec::new();
        let mut sum = if half { n / 2 } else { 0 };
        if half {
            pairs.push((Place::RealInfinite, QZ::half()));
        }
        for (p, k) in primes[1..].iter().zip(&ks) {
            pairs.push((Place::finite(*p).unwrap(), QZ::from_fraction(*k, n).unwrap()));
            sum += k;
        }
        pairs.push((Place::finite(2).unwrap(), QZ::from_fraction(-sum, n).unwrap()));
        BrauerClass::new(pairs).unwrap()
    })
}

fn leibniz(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<Rational>], total: &mut Rational) {
    let n = perm.len();
    if k == n {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut t: Rational = (0..n).map(|i| m[i][perm[i]].clone()).product();
        if inversions % 2 == 1 {
            t = -t;
        }
        *total += &t;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn polynomial_eval_is_a_homomorphism(p in poly(), q in poly(), pt in prop::collection::vec(rational(), 3)) {
        let pq = (&p * &q).eval(&pt).unwrap();
        prop_assert_eq!(pq, &p.eval(&pt).unwrap() * &q.eval(&pt).unwrap());
    }

    #[test]
    fn polynomial_json_round_trip(p in poly()) {
        let json = serde_json::to_string(&p.to_json()).unwrap();
        let back: Vec<brauer_calc::exactnum::TermJson> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(MultiPoly::from_json(p.vars(), &back).unwrap(), p);
    }

    #[test]
    fn galois_action_composes(n in 1u64..=24, i in 0usize..8, j in 0usize..8,
                              cs in prop::collection::vec(rational(), 24), ds in prop::collection::vec(rational(), 24)) {
        let field = CyclotomicField::new(n).unwrap();
        let units = field.units();
        let (a, b) = (units[i % units.len()] as i64, units[j % units.len()] as i64);
        let x = field.from_coeffs(cs[..field.degree()].to_vec()).unwrap();
        let y = field.from_coeffs(ds[..field.degree()].to_vec()).unwrap();
        let twice = x.apply_galois(b).unwrap().apply_galois(a).unwrap();
        prop_assert_eq!(twice, x.apply_galois(a * b).unwrap());
        prop_assert_eq!(x.mul(&y).apply_galois(a).unwrap(), x.apply_galois(a).unwrap().mul(&y.apply_galois(a).unwrap()));
        if !x.is_zero() {
            let inv = x.inverse().unwrap();
            prop_assert_eq!(x.mul(&inv), field.constant(Rational::one()));
        }
    }

    #[test]
    fn quadratic_conjugation(p in poly(), q in poly(), r in poly(), s in poly(), d in nonzero_int()) {
        let d = Rational::from(d);
        let u = QuadExt::new(p, q, d.clone());
        let v = QuadExt::new(r, s, d);
        prop_assert_eq!((&u * &v).conjugate(), &u.conjugate() * &v.conjugate());
        prop_assert!((&u * &u.conjugate()).surd.is_zero());
    }

    #[test]
    fn hilbert_symbol_laws(a in nonzero_int(), a2 in nonzero_int(), b in nonzero_int(), v in place()) {
        let (ra, ra2, rb) = (Rational::from(a), Rational::from(a2), Rational::from(b));
        let s = |x: &Rational, y: &Rational| hilbert_symbol(x, y, &v).unwrap();
        prop_assert_eq!(s(&ra, &rb), s(&rb, &ra));
        prop_assert_eq!(s(&(&ra * &ra2), &rb), s(&ra, &rb) * s(&ra2, &rb));
        prop_assert_eq!(s(&ra, &-ra.clone()), 1);
        if a != 1 {
            prop_assert_eq!(s(&ra, &(Rational::one() - ra.clone())), 1);
        }
        prop_assert_eq!(s(&(&ra * &ra), &rb), 1);
    }

    #[test]
    fn tensor_laws(a in class(), b in class(), c in class()) {
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
        prop_assert!(a.tensor(&a.opposite()).is_trivial());
        let lcm = num_integer::lcm(a.period(), b.period());
        prop_assert_eq!(lcm % a.tensor(&b).period(), 0);
        prop_assert!(a.power(a.period() as i64).is_trivial());
        prop_assert!(a.invariant_sum().is_zero());
    }

    #[test]
    fn period_of_powers(a in class(), l in -30i64..=30) {
        let per = a.period();
        prop_assert_eq!(a.power(l).period(), per / num_integer::gcd(l.unsigned_abs(), per));
        prop_assert_eq!(a.index_tensor_power(l), a.power(l).index());
    }

    #[test]
    fn same_subgroup_matches_brute_force(a in class(), b in class(), k in 0i64..12) {
        // Half the time compare against a power of `a`.
        let b = if k % 2 == 0 { a.power(k) } else { b };
        let brute = (0..=a.period() as i64).any(|r| a.power(r) == b)
            && (0..=b.period() as i64).any(|s| b.power(s) == a);
        let w = same_cyclic_subgroup(&a, &b);
        prop_assert_eq!(w.is_some(), brute);
        if let Some(w) = w {
            prop_assert!(w.verify(&a, &b));
        }
    }

    #[test]
    fn same_subgroup_forces_equal_quadratic_indices(a in class(), k in 1i64..12, d in prop::sample::select(vec![-1i64, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, 13, 17, -15])) {
        let per = a.period() as i64;
        prop_assume!(num_integer::gcd(k, per) == 1);
        let b = a.power(k);
        prop_assert!(same_cyclic_subgroup(&a, &b).is_some());
        prop_assert_eq!(restrict_quadratic(&a, d).unwrap().index(), restrict_quadratic(&b, d).unwrap().index());
    }

    #[test]
    fn class_json_round_trip(a in class()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: BrauerClass = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &a);
        let spec = AlgebraSpec::ByInvariants { class: a.clone(), degree: a.index() as usize * 2 };
        let json = serde_json::to_string(&spec).unwrap();
        let back: AlgebraSpec = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn determinant_matches_leibniz(n in 1usize..=4, entries in prop::collection::vec(rational(), 16)) {
        let m: Vec<Vec<Rational>> = (0..n).map(|i| entries[i * n..(i + 1) * n].to_vec()).collect();
        let vars = vec!["t".to_string()];
        let pm: Vec<Vec<MultiPoly>> = m.iter().map(|r| r.iter().map(|c| MultiPoly::constant(&vars, c.clone())).collect()).collect();
        let det = poly_det(&pm).unwrap();
        prop_assert_eq!(det.coeff(&[0]), leibniz(&m));
        let form = norm_poly_split(n).unwrap();
        let flat: Vec<Rational> = m.iter().flatten().cloned().collect();
        prop_assert_eq!(form.f.eval(&flat).unwrap(), leibniz(&m));
    }

    #[test]
    fn smooth_classification_uses_gradient(n in 2usize..=3, entries in prop::collection::vec(-2i64..=2, 9)) {
        let form = norm_poly_split(n).unwrap();
        let x: Vec<Rational> = entries[..n * n].iter().map(|&e| Rational::from(e)).collect();
        let value = form.f.eval(&x).unwrap();
        let grad_zero = (0..n * n).all(|i| form.f.partial(i).eval(&x).unwrap().is_zero());
        let expect = if !value.is_zero() {
            SmoothStatus::OffHypersurface
        } else if grad_zero {
            SmoothStatus::OnSingularLocus
        } else {
            SmoothStatus::OnSmoothLocus
        };
        prop_assert_eq!(smooth_point_check(&form, &x).unwrap(), expect);
    }

    #[test]
    fn norm_forms_are_homogeneous(a in nonzero_int(), b in nonzero_int(), m in 1usize..=2) {
        let spec = AlgebraSpec::MatrixOverQuaternion { a: a.into(), b: b.into(), m };
        let form = norm_form(&spec).unwrap();
        prop_assert_eq!(form.f.homogeneous_degree(), Some(2 * m as u32));
        prop_assert_eq!(form.f.eval(&form.identity()).unwrap(), Rational::one());
    }
}
