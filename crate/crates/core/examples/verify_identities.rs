//! Runs an identity suite and prints its residuals.
//!
//! Run with `cargo run --release --example verify_identities -- appendixB`.

use norlund::precision::PrecisionContext;
use norlund::verify::{run, Suite};

fn main() -> norlund::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("exact").parse()?;
    let ctx = PrecisionContext::new(96)?;
    let results = run(suite, &ctx, 1)?;
    for r in &results {
        println!("{} {:>10.2e} <= {:<9.2e} {}", if r.passed { "PASS" } else { "FAIL" }, r.residual, r.tolerance, r.name);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} identities, {failed} failed", results.len());
    Ok(())
}
