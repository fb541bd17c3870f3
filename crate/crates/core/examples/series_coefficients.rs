//! Rubinstein coefficients, Euler sums and the generating functions behind them.
//!
//! Run with `cargo run --release --example series_coefficients`.

use norlund::exact::{format_rational, BigRational};
use norlund::precision::{riemann_zeta_oracle, MPComplex, PrecisionContext};
use norlund::series::{alpha_coeff_exact, alpha_poly, euler_sum_zeta3, euler_sum_zeta3_tail, euler_sum_zeta4, euler_sum_zeta4_tail};
use rug::Float;

fn main() -> norlund::Result<()> {
    println!("alpha_k(s) as polynomials in s:");
    for k in 0..=4 {
        println!("  k={k}: {}", alpha_poly(k).to_strings().join(", "));
    }
    println!("alpha_6(-5) = {}", format_rational(&alpha_coeff_exact(6, &BigRational::from(-5))));

    let ctx = PrecisionContext::new(64)?;
    let p = ctx.working_bits();
    let z3 = riemann_zeta_oracle(&MPComplex::from_i64(p, 3), &ctx)?.re;
    let z4 = riemann_zeta_oracle(&MPComplex::from_i64(p, 4), &ctx)?.re;
    println!("\n     N   zeta(3) residual / tail   zeta(4) residual / tail");
    for n in [10usize, 100, 1000, 10_000] {
        let r3 = Float::with_val(p, &z3 - euler_sum_zeta3(n, &ctx)?) / euler_sum_zeta3_tail(n, &ctx)?;
        let r4 = Float::with_val(p, &z4 - euler_sum_zeta4(n, &ctx)?) / euler_sum_zeta4_tail(n, &ctx)?;
        println!("{n:>6}   {:>22.4}   {:>22.4}", r3.to_f64(), r4.to_f64());
    }
    Ok(())
}
