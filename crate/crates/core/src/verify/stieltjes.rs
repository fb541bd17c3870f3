use rug::{Float, Rational};

use super::IdentityResult;
use crate::error::Result;
use crate::exact::{factorial, norlund_poly, norlund_poly_dalpha};
use crate::precision::{euler_gamma, PrecisionContext};
use crate::stieltjes::{
    corollary3_check, eta1, eta1_fit, gamma0, gamma1, gamma1_binomial, gamma1_hyp, gamma1_quadrature, gamma2,
    laurent_fit, log_sum_constant, QuadratureVariant,
};

const SUITE: &str = "stieltjes";

fn diff(a: &Float, b: &Float) -> f64 {
    Float::with_val(a.prec().max(b.prec()), a - b).abs().to_f64()
}

/// `γ₁(1)` four ways against the Laurent fit of the oracle.
pub fn gamma1_methods(ctx: &PrecisionContext) -> Result<Vec<IdentityResult>> {
    let p = ctx.working_bits();
    let one = Float::with_val(p, 1);
    let fit = laurent_fit(1, &one, ctx)?.value;
    let mut out = Vec::new();
    let series = [("series", gamma1(&one, ctx)?.value), ("binomial series", gamma1_binomial(&one, ctx)?.value)];
    for (name, v) in &series {
        out.push(IdentityResult::new(SUITE, format!("gamma_1 {name} = Laurent fit"), diff(v, &fit), 1e-15));
    }
    let quad = [
        ("4F3 integral", gamma1_hyp(&one, ctx)?.value),
        ("digamma integral", gamma1_quadrature(QuadratureVariant::Digamma, ctx)?.value),
        ("pole-subtracted integral", gamma1_quadrature(QuadratureVariant::PoleSubtracted, ctx)?.value),
    ];
    for (name, v) in &quad {
        out.push(IdentityResult::new(SUITE, format!("gamma_1 {name} = Laurent fit"), diff(v, &fit), 1e-8));
    }
    let reference = Float::with_val(p, Float::parse("-0.0728158454836767").expect("literal"));
    out.push(IdentityResult::new(SUITE, "gamma_1 = -0.0728158454836767", diff(&series[0].1, &reference), 1e-16));
    Ok(out)
}

/// `γ₂(1)` from the Nörlund series against the Laurent fit.
pub fn gamma2_check(ctx: &PrecisionContext) -> Result<IdentityResult> {
    let one = Float::with_val(ctx.working_bits(), 1);
    let s = gamma2(&one, ctx)?.value;
    let f = laurent_fit(2, &one, ctx)?;
    Ok(IdentityResult::new(SUITE, "gamma_2 series = Laurent fit", diff(&s, &f.value), 1e-10)
        .with_note(format!("series {}, fit {}", s.to_f64(), f.value.to_f64())))
}

/// Agreement of all methods at `a = 2` within `2^(−target/2)` relative.
pub fn cross_method(ctx: &PrecisionContext) -> Result<Vec<IdentityResult>> {
    let p = ctx.working_bits();
    let a = Float::with_val(p, 2);
    let tol = (-(ctx.target_bits() as f64) / 2.0).exp2();
    let s = gamma1(&a, ctx)?.value;
    let scale = s.to_f64().abs().max(1e-300);
    let mut out = Vec::new();
    for (name, v) in [
        ("binomial series", gamma1_binomial(&a, ctx)?.value),
        ("4F3 integral", gamma1_hyp(&a, ctx)?.value),
        ("Laurent fit", laurent_fit(1, &a, ctx)?.value),
    ] {
        out.push(IdentityResult::new(SUITE, format!("gamma_1(2): series = {name}"), diff(&s, &v) / scale, tol));
    }
    let g0 = gamma0(&a, ctx)?;
    let want = Float::with_val(p, euler_gamma(p) - 1u32);
    out.push(IdentityResult::new(SUITE, "gamma_0(2) = gamma - 1", diff(&g0, &want), (-(ctx.target_bits() as f64) + 8.0).exp2()));
    let g2 = gamma2(&a, ctx)?.value;
    let f2 = laurent_fit(2, &a, ctx)?.value;
    out.push(IdentityResult::new(SUITE, "gamma_2(2): series = Laurent fit", diff(&g2, &f2), 1e-10));
    Ok(out)
}

/// The exact `∂_α B_k^(α)` at `α = k` against a central difference with
/// step `h = 2^(−working/3)`, `k ≤ 20`; the difference must stay within
/// `h²|B'''|/6` plus rounding.
pub fn dalpha_finite_difference(ctx: &PrecisionContext) -> IdentityResult {
    let p = ctx.working_bits();
    let h_exp = (p / 3) as i32;
    let h = Float::with_val(p, Float::i_exp(1, -h_exp));
    let mut worst = 0.0f64;
    for k in 1..=20usize {
        let alpha = Float::with_val(p, k);
        let poly = norlund_poly(k);
        let eval = |x: &Float| {
            let mut acc = Float::new(p);
            for c in poly.coeffs().iter().rev() {
                acc *= x;
                acc += c;
            }
            acc
        };
        let fd = (eval(&Float::with_val(p, &alpha + &h)) - eval(&Float::with_val(p, &alpha - &h))) / Float::with_val(p, &h * 2u32);
        let exact = Float::with_val(p, &norlund_poly_dalpha(k).eval(&Rational::from(k)));
        let third = poly.derivative().derivative().derivative().eval(&Rational::from(k));
        let bound = Float::with_val(p, &third).abs().to_f64() * h.to_f64().powi(2) / 6.0 * 1.01
            + Float::with_val(p, &exact).abs().to_f64() * (-(p as f64) + h_exp as f64 + 8.0).exp2()
            + (factorial(k).to_f64()) * (-(p as f64) + h_exp as f64 + 8.0).exp2();
        worst = worst.max(diff(&fd, &exact) / bound);
    }
    IdentityResult::new(SUITE, "d/dalpha B_k^(alpha) exact = central difference within bound, k<=20", worst, 1.0)
        .with_note("residual is the worst ratio to the bound")
}

/// The constants of the two corollaries and `η₁`.
pub fn constants(ctx: &PrecisionContext) -> Result<Vec<IdentityResult>> {
    let p = ctx.working_bits();
    let mut out = Vec::new();
    let c = corollary3_check(ctx)?;
    let half = (-(ctx.target_bits() as f64) / 2.0).exp2();
    out.push(IdentityResult::new(SUITE, "2[zeta(2) - gamma_1] = gamma^2 + 1 + ...", c.residual.to_f64(), half));
    out.push(IdentityResult::new(
        SUITE,
        "sum_{k>=2} (-1)^k zeta(k)/k = gamma",
        diff(&c.auxiliary, &euler_gamma(p)),
        (-(ctx.target_bits() as f64) + 8.0).exp2(),
    ));
    out.push(IdentityResult::new(
        SUITE,
        "Abel sum of sum (-1)^(k+1) zeta(k+1) = 1",
        diff(&c.abel_term, &Float::with_val(p, 1)),
        (-(ctx.target_bits() as f64) + 8.0).exp2(),
    ));
    let shown = Float::with_val(p, Float::parse("1.25774688694").expect("literal"));
    let mut reps = Vec::new();
    for r in 1..=4 {
        let v = log_sum_constant(r, ctx)?;
        out.push(IdentityResult::new(SUITE, format!("sum (-1)^(k+1) zeta(k+1)/k representation {r} = 1.25774688694"), diff(&v, &shown), 1e-10));
        reps.push(v);
    }
    let spread = reps.iter().map(|v| diff(v, &reps[0])).fold(0.0, f64::max);
    out.push(IdentityResult::new(SUITE, "four representations agree", spread, 1e-9));
    let e = eta1(ctx)?;
    let f = eta1_fit(ctx)?;
    out.push(IdentityResult::new(SUITE, "eta_1 = gamma^2 + 2 gamma_1 = oracle fit", diff(&e, &f), 1e-12));
    out.push(IdentityResult::exact(SUITE, "eta_1 > 0", e > 0));
    Ok(out)
}

pub fn stieltjes_suite(ctx: &PrecisionContext) -> Result<Vec<IdentityResult>> {
    let mut out = gamma1_methods(ctx)?;
    out.push(gamma2_check(ctx)?);
    out.extend(cross_method(ctx)?);
    out.push(dalpha_finite_difference(ctx));
    out.extend(constants(ctx)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let ctx = PrecisionContext::new(64).unwrap();
        for r in stieltjes_suite(&ctx).unwrap() {
            assert!(r.passed, "{r:?}");
        }
    }
}
