use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Float, Rational};

use super::series::rel;
use super::IdentityResult;
use crate::error::Result;
use crate::exact::{factorial, stirling1};
use crate::gen_stirling::{
    appendix_a_suite, rising_derivative_at_one, stirling1_closed_form, stirling1_complex, stirling1_recursion_check,
};
use crate::precision::{MPComplex, PrecisionContext};

const SUITE: &str = "appendixB";

/// The Beta-function identities at a few `(x, n)`.
pub fn appendix_a(ctx: &PrecisionContext) -> Result<Vec<IdentityResult>> {
    let mut out = Vec::new();
    for (x, n) in [(1.0, 0), (1.0, 5), (2.0, 3), (0.5, 8), (3.75, 12)] {
        for mut r in appendix_a_suite(&Float::with_val(ctx.working_bits(), x), n, ctx)? {
            r.name = format!("{} at x={x}", r.name);
            out.push(r);
        }
    }
    Ok(out)
}

/// `λ` uniform on `1/2 < Re λ < 6`, `|Im λ| < 4`, away from the integers
/// `λ ≤ 1` so that `λ − 1` avoids the poles.
pub fn recursion_grid(seed: u64, points: usize, p: u32) -> Vec<MPComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb1);
    let mut out = Vec::with_capacity(points);
    while out.len() < points {
        let (x, y): (f64, f64) = (rng.gen_range(0.5..6.0), rng.gen_range(-4.0..4.0));
        if (x - 1.0).hypot(y) > 1e-3 && x > 0.5 {
            out.push(MPComplex::from_f64(p, x, y));
        }
    }
    out
}

/// Complex Stirling numbers: integer agreement, the recursion on a random
/// grid, closed forms and the derivative formula they start from.
pub fn appendix_b(ctx: &PrecisionContext, seed: u64, points: usize) -> Result<Vec<IdentityResult>> {
    let p = ctx.working_bits();
    let tol = (-120f64).exp2().min((-(ctx.target_bits() as f64) + 8.0).exp2());
    let mut out = Vec::new();

    let mut worst = 0.0f64;
    for n in 2..=10usize {
        for k in 1..=4u32 {
            let v = stirling1_complex(&MPComplex::from_i64(p, n as i64), k, ctx)?;
            let want = MPComplex::from_real(Float::with_val(p, &stirling1(n, k as usize)));
            worst = worst.max((&v - &want).abs().to_f64());
        }
    }
    out.push(IdentityResult::new(SUITE, "s(lambda,k) = integer s(n,k), n=2..10, k<=4", worst, tol));

    let grid = recursion_grid(seed, points, p);
    let mut worst = 0.0f64;
    for l in &grid {
        for k in 2..=4 {
            worst = worst.max(stirling1_recursion_check(l, k, ctx)?.to_f64());
        }
    }
    out.push(
        IdentityResult::new(SUITE, "s(l,k) = s(l-1,k-1) - (l-1) s(l-1,k), k=2..4", worst, tol)
            .with_note(format!("{} random lambda", grid.len())),
    );

    let mut worst = 0.0f64;
    for l in grid.iter().take(10) {
        for k in 2..=4 {
            let a = stirling1_complex(l, k, ctx)?;
            let b = stirling1_closed_form(l, k, ctx)?;
            worst = worst.max(rel(&b, &a));
        }
    }
    out.push(IdentityResult::new(SUITE, "harmonic-number closed forms = Bell polynomial form, k=2..4", worst, (-(ctx.target_bits() as f64) + 8.0).exp2()));

    // the three-term closed form reproduces s(n,4), not s(n,3)
    let mut is_k4 = true;
    let mut is_k3 = true;
    for n in 4..=9i64 {
        let v = stirling1_closed_form(&MPComplex::from_i64(p, n), 4, ctx)?;
        let k4 = Float::with_val(p, &stirling1(n as usize, 4));
        let k3 = Float::with_val(p, &stirling1(n as usize, 3));
        is_k4 &= Float::with_val(p, &v.re - &k4).abs() < 1e-30;
        is_k3 &= Float::with_val(p, &v.re - &k3).abs() < 1e-30;
    }
    out.push(
        IdentityResult::exact(SUITE, "three-term closed form is s(lambda,4)", is_k4 && !is_k3)
            .with_note("the same form does not reproduce s(lambda,3)"),
    );

    let holds = (0..=6usize).all(|j| {
        (0..=3usize).all(|l| {
            let sign = if (j + l) % 2 == 0 { 1 } else { -1 };
            rising_derivative_at_one(j, l) == Rational::from(stirling1(j + 1, l + 1) * factorial(l) * sign)
        })
    });
    out.push(IdentityResult::exact(SUITE, "(d/ds)^l (s)_j at 1 = (-1)^(j+l) l! s(j+1,l+1), j<=6, l<=3", holds));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        let ctx = PrecisionContext::default();
        for r in appendix_b(&ctx, 3, 10).unwrap() {
            assert!(r.passed, "{r:?}");
        }
        let ctx = PrecisionContext::new(64).unwrap();
        for r in appendix_a(&ctx).unwrap() {
            assert!(r.passed, "{r:?}");
        }
    }
}
