//! Brauer classes given by local invariants: tensor products, powers,
//! period and index.

use brauer_calc::brauer::{AlgebraSpec, BrauerClass};

fn show(name: &str, c: &BrauerClass) {
    let inv: Vec<String> = c.invariants().iter().map(|(v, x)| format!("{v}:{x}")).collect();
    println!("{name:<10} [{}]  per={} ind={}", inv.join(", "), c.period(), c.index());
}

fn main() -> brauer_calc::Result<()> {
    let a = BrauerClass::from_strs(&[("2", "1/3"), ("5", "2/3")])?;
    let b = BrauerClass::from_strs(&[("inf", "1/2"), ("3", "1/4"), ("7", "1/4")])?;
    show("A", &a);
    show("B", &b);
    show("A ⊗ B", &a.tensor(&b));
    show("A^op", &a.opposite());
    for l in 1..=6 {
        show(&format!("B^{l}"), &b.power(l));
    }

    // A class fixed by an algebra description.
    let h = AlgebraSpec::MatrixOverQuaternion {
        a: (-1).into(),
        b: (-1).into(),
        m: 3,
    };
    show("M3(H)", &h.class()?);
    println!("degree {} dimension {}", h.degree(), h.dimension());
    Ok(())
}
