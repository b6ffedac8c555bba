//! Which symmetric powers of Brauer–Severi varieties are birational, and
//! the dimension count behind it.

use brauer_calc::geometry::{birational_sympow_exists, sympow_dimension_model, sympow_verdict};

fn main() -> brauer_calc::Result<()> {
    let n = 7;
    println!("degree {n}: S^{} already birational", birational_sympow_exists(n)?);
    for m in 1..=n {
        let v = sympow_verdict(n, m)?;
        print!("  m={m}: {:?}", v.kind);
        if m < n {
            let d = sympow_dimension_model(n, m)?;
            print!("  dim {} = {} + {}", d.sym_power, d.generalized, d.projective_factor);
        }
        println!();
    }
    Ok(())
}
