//! Local Hilbert symbols and the quaternion classes they assemble into.
//!
//! Run with `cargo run --example hilbert_symbols -- 3 -5`.

use brauer_calc::brauer::{hilbert_symbol, quaternion_class, Place};
use brauer_calc::exactnum::Rational;

fn main() -> brauer_calc::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (a, b): (Rational, Rational) = match args.as_slice() {
        [a, b] => (a.parse()?, b.parse()?),
        _ => (Rational::from(-1), Rational::from(-1)),
    };

    println!("(a, b) = ({a}, {b})");
    let mut places = vec![Place::RealInfinite];
    for p in [2, 3, 5, 7, 11, 13] {
        places.push(Place::finite(p)?);
    }
    for v in &places {
        println!("  ({a}, {b})_{v:<4} = {:+}", hilbert_symbol(&a, &b, v)?);
    }

    let class = quaternion_class(&a, &b)?;
    println!("ramified at: {:?}", class.support().map(|p| p.to_string()).collect::<Vec<_>>());
    println!("invariant sum = {} (reciprocity)", class.invariant_sum());
    Ok(())
}
