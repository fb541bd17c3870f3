//! Stirling numbers of the first kind with a complex first argument.
//!
//! Run with `cargo run --example complex_stirling`.

use norlund::exact::stirling1;
use norlund::gen_stirling::{stirling1_closed_form, stirling1_complex, stirling1_recursion_check};
use norlund::precision::{MPComplex, PrecisionContext};

fn main() -> norlund::Result<()> {
    let ctx = PrecisionContext::new(128)?;
    let p = ctx.working_bits();

    println!("integer arguments reproduce s(n,k):");
    for n in 4..=7i64 {
        let row: Vec<String> = (1..=4)
            .map(|k| format!("{:.6}", stirling1_complex(&MPComplex::from_i64(p, n), k, &ctx).unwrap().re))
            .collect();
        let exact: Vec<String> = (1..=4).map(|k| stirling1(n as usize, k).to_string()).collect();
        println!("  n={n}: {row:?}  exact {exact:?}");
    }

    let lambda = MPComplex::parse("2.5+1.25i", p)?;
    println!("\nlambda = {}", lambda.to_decimal(6));
    for k in 1..=4 {
        let v = stirling1_complex(&lambda, k, &ctx)?;
        let extra = if k >= 2 {
            let c = stirling1_closed_form(&lambda, k, &ctx)?;
            let r = stirling1_recursion_check(&lambda, k, &ctx)?;
            format!("closed form differs by {:.1e}, recursion residual {:.1e}", (&v - &c).abs().to_f64(), r.to_f64())
        } else {
            String::new()
        };
        println!("  s(lambda,{k}) = {:.24}  {extra}", v);
    }
    Ok(())
}
