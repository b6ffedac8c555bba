//! Deciding whether two classes generate the same cyclic subgroup, with
//! the witnessing exponents, and what happens over the function field of
//! the Brauer–Severi variety of one of them.

use brauer_calc::brauer::{
    index_over_function_field, same_cyclic_subgroup, splits_over_function_field, BrauerClass,
};

fn main() -> brauer_calc::Result<()> {
    let a = BrauerClass::from_strs(&[("2", "1/5"), ("3", "4/5")])?;
    let candidates = [
        ("A^3", a.power(3)),
        ("A^5", a.power(5)),
        ("other", BrauerClass::from_strs(&[("2", "1/5"), ("7", "4/5")])?),
    ];

    for (name, b) in &candidates {
        match same_cyclic_subgroup(&a, b) {
            Some(w) => println!("<A> = <{name}>: r={} s={}", w.r, w.s),
            None => println!("<A> != <{name}>"),
        }
        println!(
            "  {name} over Q(X_A): splits={} index={}",
            splits_over_function_field(b, &a),
            index_over_function_field(b, &a)
        );
    }
    Ok(())
}
