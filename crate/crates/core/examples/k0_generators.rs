//! Image of K0 of a Brauer–Severi variety in K0 of projective space, and
//! the generators of the graded pieces.

use brauer_calc::brauer::AlgebraSpec;
use brauer_calc::ktheory::{gr_generator, k0_image_generators};

fn main() -> brauer_calc::Result<()> {
    let spec = AlgebraSpec::Quaternion {
        a: 3.into(),
        b: (-1).into(),
    };
    let class = spec.class()?;
    println!("generators for (3, -1), degree {}:", spec.degree());
    for g in k0_image_generators(&class, spec.degree())? {
        println!("  O({})^⊕{}  ->  {}", -(g.level as i64), g.rank, g.polynomial());
    }

    println!("graded pieces for index 5:");
    for i in 0..5 {
        let (scale, poly) = gr_generator(5, i)?;
        println!("  gr^{i}: {scale} * ({poly})");
    }
    Ok(())
}
