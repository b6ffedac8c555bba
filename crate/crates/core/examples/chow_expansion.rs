//! Expanding p(h−1)^l in AS-bundles and comparing the two sign choices.

use brauer_calc::ktheory::sign_discrepancy;

fn main() -> brauer_calc::Result<()> {
    for p in [2u64, 3, 5] {
        for l in 0..p {
            let d = sign_discrepancy(p, l)?;
            println!("{}", d.summary());
        }
    }
    Ok(())
}
