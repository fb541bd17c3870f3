//! Stieltjes constants γ₁ and γ₂ several independent ways.
//!
//! Run with `cargo run --release --example stieltjes_constants`.

use norlund::precision::PrecisionContext;
use norlund::stieltjes::{
    gamma1, gamma1_binomial, gamma1_hyp, gamma1_quadrature, gamma2, laurent_fit, log_sum_constant, QuadratureVariant,
};
use rug::Float;

fn main() -> norlund::Result<()> {
    let ctx = PrecisionContext::new(96)?;
    let one = Float::with_val(ctx.working_bits(), 1);

    println!("gamma_1(1):");
    for (name, r) in [
        ("series", gamma1(&one, &ctx)?),
        ("binomial series", gamma1_binomial(&one, &ctx)?),
        ("4F3 integral", gamma1_hyp(&one, &ctx)?),
        ("digamma integral", gamma1_quadrature(QuadratureVariant::Digamma, &ctx)?),
        ("pole-subtracted", gamma1_quadrature(QuadratureVariant::PoleSubtracted, &ctx)?),
        ("Laurent fit", laurent_fit(1, &one, &ctx)?),
    ] {
        println!("  {name:<16} {:.26}  (error estimate {:.1e})", r.value, r.tail_estimate.to_f64());
    }

    println!("gamma_2(1):");
    for r in [gamma2(&one, &ctx)?, laurent_fit(2, &one, &ctx)?] {
        println!("  {:<16} {:.26}  (error estimate {:.1e})", r.method.to_string(), r.value, r.tail_estimate.to_f64());
    }

    let a = Float::with_val(ctx.working_bits(), 0.25);
    println!("gamma_1(1/4) = {:.26}", gamma1(&a, &ctx)?.value);

    println!("sum_k (-1)^(k+1) zeta(k+1)/k:");
    for rep in 1..=4 {
        println!("  representation {rep}: {:.26}", log_sum_constant(rep, &ctx)?);
    }
    Ok(())
}
