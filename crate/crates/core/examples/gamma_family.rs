//! Digamma, polygamma and ln Γ from their Nörlund-coefficient series.
//!
//! `digamma_series(a)` returns `ψ(a) − ln a` and `log_gamma_series(x)`
//! returns `ln Γ(x+1)`, the forms the series produce directly.
//!
//! Run with `cargo run --example gamma_family`.

use norlund::precision::{digamma, log_gamma, polygamma, MPComplex, PrecisionContext};
use norlund::series::{digamma_series, log_gamma_series, polygamma_series};

fn main() -> norlund::Result<()> {
    let ctx = PrecisionContext::new(96)?;
    let p = ctx.working_bits();
    for x in ["0.5", "1", "3.25", "2+3i"] {
        let z = MPComplex::parse(x, p)?;
        let tri = polygamma_series(1, &z, &ctx)?;
        let psi_minus_log = digamma_series(&z, &ctx)?;
        let psi = &psi_minus_log.value + &z.ln();
        let lg = log_gamma_series(&z.add_i64(-1), &ctx)?;
        println!("x = {x}");
        println!("  psi(x)    = {:.28}  (backbone differs by {:.1e})", psi, (&psi - &digamma(&z, &ctx)?).abs().to_f64());
        println!("  psi'(x)   = {:.28}  (backbone differs by {:.1e})", tri.value, (&tri.value - &polygamma(1, &z, &ctx)?).abs().to_f64());
        println!("  lnGamma(x) = {:.28}  (backbone differs by {:.1e})", lg.value, (&lg.value - &log_gamma(&z, &ctx)?).abs().to_f64());
    }
    Ok(())
}
