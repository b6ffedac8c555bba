//! Points in general position on the moment curve, permuted by the Galois
//! group of a cyclotomic field.

use brauer_calc::exactnum::CyclotomicField;
use brauer_calc::galoispoints::{
    galois_orbit, galois_stability_check, general_position_check, pad_orbit, vandermonde_lift,
};

fn main() -> brauer_calc::Result<()> {
    let field = CyclotomicField::new(7)?;
    let orbit = galois_orbit(&field, 1);
    let alphas = pad_orbit(&orbit, 8)?;
    let config = vandermonde_lift(alphas)?;

    println!("{} points in P^{} over Q(z_7)", config.alphas.len(), config.dimension());
    for a in &config.alphas {
        println!("  alpha = {a}");
    }
    println!("Vandermonde product = {}", config.vandermonde_product());
    println!("general position: {}", general_position_check(&config));
    for a in field.units() {
        let s = galois_stability_check(&config, a as i64)?;
        println!("  z -> z^{a}: {:?} equivariant={}", s.alpha_permutation, s.equivariant());
    }
    Ok(())
}
