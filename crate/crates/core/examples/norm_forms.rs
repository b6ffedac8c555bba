//! Reduced-norm polynomials, smooth points, and multiplicativity.

use brauer_calc::brauer::AlgebraSpec;
use brauer_calc::exactnum::Rational;
use brauer_calc::normform::{norm_form, norm_multiplicativity_check, smooth_point_check};

fn main() -> brauer_calc::Result<()> {
    let specs = [
        AlgebraSpec::Split { degree: 3 },
        AlgebraSpec::Quaternion { a: (-1).into(), b: 3.into() },
        AlgebraSpec::MatrixOverQuaternion { a: (-1).into(), b: (-1).into(), m: 2 },
    ];
    for spec in &specs {
        let form = norm_form(spec)?;
        println!("{spec:?}: degree {}, {} terms", form.degree(), form.f.num_terms());
        if form.f.num_terms() <= 8 {
            println!("  N = {}", form.f);
        }
        let report = norm_multiplicativity_check(&form, 20, 7)?;
        println!("  multiplicative on {} random pairs: {}", report.trials, report.passed());
    }

    let split2 = norm_form(&AlgebraSpec::Split { degree: 2 })?;
    for pt in [[1, 0, 0, 0], [1, 1, 1, 1], [0, 0, 0, 0], [1, 0, 0, 1]] {
        let x: Vec<Rational> = pt.iter().map(|&v| v.into()).collect();
        println!("det at {pt:?}: {:?}", smooth_point_check(&split2, &x)?);
    }
    Ok(())
}
