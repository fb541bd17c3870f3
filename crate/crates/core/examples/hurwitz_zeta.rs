//! The Hurwitz and Riemann zeta functions from the Nörlund series, checked
//! against the independent Euler–Maclaurin evaluation.
//!
//! Run with `cargo run --example hurwitz_zeta`.

use norlund::precision::{hurwitz_zeta_oracle, MPComplex, PrecisionContext};
use norlund::series::{hurwitz_zeta, riemann_zeta};

fn main() -> norlund::Result<()> {
    let ctx = PrecisionContext::new(128)?;
    let p = ctx.working_bits();

    let z2 = riemann_zeta(&MPComplex::from_i64(p, 2), &ctx)?;
    println!("zeta(2)        = {:.40}  ({} terms)", z2.value, z2.terms_used);

    for (s, a) in [("0", "0.75"), ("-3", "1/3"), ("0.5+14.134725i", "1"), ("-7.5-2i", "2.25")] {
        let s = MPComplex::parse(s, p)?;
        let a = if a == "1/3" { MPComplex::from_real(rug::Float::with_val(p, 1) / 3u32) } else { MPComplex::parse(a, p)? };
        let series = hurwitz_zeta(&s, &a, &ctx)?;
        let oracle = hurwitz_zeta_oracle(&s, &a.re, &ctx)?;
        let err = (&series.value - &oracle).abs().to_f64();
        println!(
            "zeta({}, {}) = {:.30}  terms {:>3}  |series - oracle| = {err:.1e}",
            s.to_decimal(10),
            a.to_decimal(6),
            series.value,
            series.terms_used
        );
    }

    // the trivial zeros come out as exact cancellations
    for n in 1..=3 {
        let z = riemann_zeta(&MPComplex::from_i64(p, -2 * n), &ctx)?;
        println!("|zeta({})| = {:.1e}", -2 * n, z.value.abs().to_f64());
    }
    Ok(())
}
