//! Exact Nörlund polynomials, Nörlund numbers and the constants built from them.
//!
//! Run with `cargo run --example norlund_polynomials`.

use norlund::exact::{
    bernoulli_number, format_rational, norlund_number, norlund_poly, p_constant, stirling1, stirling2, BigRational,
};

fn main() {
    println!("B_n^(α) as polynomials in α:");
    for n in 0..=5 {
        println!("  n={n}: {}", norlund_poly(n).to_strings().join(", "));
    }

    // B_n^(1) are the Bernoulli numbers, B_n^(n) the Nörlund numbers
    println!("\n  n  B_n^(1)  B_n^(n)   p_n");
    for n in 0..=8 {
        let b1 = norlund_poly(n).eval(&BigRational::from(1));
        assert_eq!(b1, bernoulli_number(n));
        let p = if n >= 2 { format_rational(&p_constant(n).unwrap()) } else { "-".into() };
        println!("  {n}  {:<7}  {:<8}  {p}", format_rational(&b1), format_rational(&norlund_number(n)));
    }

    println!("\nStirling numbers, row 6:");
    println!("  s(6,k) = {:?}", (0..=6).map(|k| stirling1(6, k).to_string()).collect::<Vec<_>>());
    println!("  S(6,k) = {:?}", (0..=6).map(|k| stirling2(6, k).to_string()).collect::<Vec<_>>());

    // B_n^(α) at a non-integer order
    let half = BigRational::from((1, 2));
    println!("\nB_4^(1/2) = {}", format_rational(&norlund_poly(4).eval(&half)));
}
