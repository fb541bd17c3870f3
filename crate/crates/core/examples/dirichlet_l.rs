//! Dirichlet L-functions from a character table.
//!
//! Run with `cargo run --example dirichlet_l`.

use norlund::precision::{pi, MPComplex, PrecisionContext};
use norlund::series::{beta_odd_value, dirichlet_beta, dirichlet_l, DirichletCharacter};

fn main() -> norlund::Result<()> {
    let ctx = PrecisionContext::new(128)?;
    let p = ctx.working_bits();

    let catalan = dirichlet_beta(&MPComplex::from_i64(p, 2), &ctx)?;
    println!("L(2, chi_4) = Catalan's constant = {:.40}", catalan.value);
    println!("L(1, chi_4) = {:.40}", dirichlet_beta(&MPComplex::one(p), &ctx)?.value);
    println!("pi/4        = {:.40}", pi(p) / 4u32);
    println!("L(3, chi_4) = {:.40} (closed form)", beta_odd_value(1, &ctx));

    // the real character mod 5 and the principal character mod 3
    let chi5 = DirichletCharacter::from_integers(5, &[1, -1, -1, 1, 0])?;
    let chi3 = DirichletCharacter::principal(3)?;
    for s in ["1", "2", "0.5+3i"] {
        let s = MPComplex::parse(s, p)?;
        println!("L({}, chi_5) = {:.30}", s.to_decimal(6), dirichlet_l(&s, &chi5, &ctx)?.value);
    }
    println!("L(2, chi_3^0) = {:.30} (= (1 - 1/9) zeta(2))", dirichlet_l(&MPComplex::from_i64(p, 2), &chi3, &ctx)?.value);
    Ok(())
}
