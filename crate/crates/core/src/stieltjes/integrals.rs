use rug::Float;

use super::{check_a, psi, psi_n, shift_terms, steps_to, Method, StieltjesResult};
use crate::error::{Error, Result};
use crate::precision::{euler_gamma, pi, quadrature, PrecisionContext};
use crate::series::shift_target;

/// `v·₄F₃(1,1,1,v+1; 2,2,a+1; 1) = v Σ_{n≥0} (v+1)_n/((n+1)² (a+1)_n)`,
/// summed until the terms fall below `2^-p` of the sum.
pub fn hyp_integrand(v: &Float, a: &Float, p: u32, max_terms: usize) -> Result<Float> {
    if v.is_zero() {
        return Ok(Float::new(p));
    }
    let mut t = Float::with_val(p, 1);
    let mut sum = Float::with_val(p, 1);
    let decay = Float::with_val(53, a - v).to_f64() + 1.0;
    let mut n = 0u32;
    loop {
        n += 1;
        if n as usize > max_terms {
            return Err(Error::PrecisionLoss(format!(
                "₄F₃ series at v = {} still above 2^-{p} after {max_terms} terms",
                v.to_f64()
            )));
        }
        t *= Float::with_val(p, v + n);
        t /= Float::with_val(p, a + n);
        let r = Float::with_val(p, n) / (n + 1);
        t *= Float::with_val(p, r.square_ref());
        sum += &t;
        // remaining terms shrink at least like n^(−decay)
        let bound = Float::with_val(53, &t) * (n as f64 / (decay - 1.0).max(1e-3)).max(1.0);
        if bound < Float::with_val(53, Float::i_exp(1, -(p as i32))) * Float::with_val(53, &sum) {
            break;
        }
    }
    Ok(sum * v)
}

/// `γ₁(a) = ½[ψ'(a) − ψ²(a)] − (1/a)∫_0^1 v·₄F₃(1,1,1,v+1; 2,2,a+1; 1) dv`.
///
/// Evaluated at the shifted `a'`; the integral is accurate to about half the
/// target precision.
pub fn gamma1_hyp(a: &Float, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    check_a(a)?;
    let p = ctx.working_bits();
    let (direct, a2) = shift_terms(a, steps_to(a, shift_target(p)), 1, p);
    let ps = psi(&a2, p)?;
    let head = (psi_n(1, &a2, p)? - Float::with_val(p, ps.square_ref())) / 2u32;
    let max_terms = ctx.max_terms();
    let integral = quadrature(|v, _| hyp_integrand(v, &a2, p, max_terms), ctx)?;
    let value = direct + head - integral / &a2;
    Ok(StieltjesResult {
        order: 1,
        a: a.clone(),
        value,
        method: Method::Quadrature,
        tail_estimate: Float::with_val(p, Float::i_exp(1, -((ctx.target_bits() / 2) as i32))),
        terms_used: 0,
    })
}

/// The two digamma integrals for `γ₁ = γ₁(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadratureVariant {
    /// `π²/6 + ∫_0^1 (γψ(x) + ½[ψ²(x) − ψ'(x)]) dx`.
    Digamma,
    /// `π²/6 − ½∫_0^1 [2γ/x + ψ'(x) − ψ²(x)] dx`.
    PoleSubtracted,
}

/// `γ₁` by quadrature. The integrands are rewritten through `ψ(x+1)` and
/// `ψ'(x+1)` so that the `1/x²` and `1/x` parts cancel in closed form:
/// `γψ(x) + ½[ψ² − ψ'](x) = γψ(x+1) + ½[ψ²(x+1) − ψ'(x+1)] − [ψ(x+1) + γ]/x`.
pub fn gamma1_quadrature(variant: QuadratureVariant, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    let p = ctx.working_bits();
    let g = euler_gamma(p);
    let integral = quadrature(
        |x, _| {
            let x1 = Float::with_val(p, x + 1u32);
            let ps = psi(&x1, p)?;
            let p1 = psi_n(1, &x1, p)?;
            let sq = Float::with_val(p, ps.square_ref());
            let over = Float::with_val(p, &ps + &g) / x;
            Ok(match variant {
                QuadratureVariant::Digamma => Float::with_val(p, &g * &ps) + (sq - p1) / 2u32 - over,
                QuadratureVariant::PoleSubtracted => p1 - sq + over * 2u32,
            })
        },
        ctx,
    )?;
    let z2 = Float::with_val(p, pi(p).square() / 6u32);
    let value = match variant {
        QuadratureVariant::Digamma => z2 + integral,
        QuadratureVariant::PoleSubtracted => z2 - integral / 2u32,
    };
    Ok(StieltjesResult {
        order: 1,
        a: Float::with_val(p, 1),
        value,
        method: Method::Quadrature,
        tail_estimate: Float::with_val(p, Float::i_exp(1, -((ctx.target_bits() / 2) as i32))),
        terms_used: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const G1: f64 = -0.072_815_845_483_676_72;

    #[test]
    fn integrand_vanishes_at_zero() {
        let z = hyp_integrand(&Float::new(128), &Float::with_val(128, 1), 128, 100).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn hyp_at_one_and_two() {
        let ctx = PrecisionContext::new(64).unwrap();
        let r = gamma1_hyp(&Float::with_val(128, 1), &ctx).unwrap();
        assert!((r.value.to_f64() - G1).abs() < 1e-15);
        let two = super::super::gamma1(&Float::with_val(128, 2), &ctx).unwrap().value;
        let r = gamma1_hyp(&Float::with_val(128, 2), &ctx).unwrap();
        assert!(Float::with_val(128, &r.value - &two).abs() < 1e-15);
    }

    #[test]
    fn both_integrals() {
        let ctx = PrecisionContext::new(64).unwrap();
        let a = gamma1_quadrature(QuadratureVariant::Digamma, &ctx).unwrap().value;
        let b = gamma1_quadrature(QuadratureVariant::PoleSubtracted, &ctx).unwrap().value;
        assert!((a.to_f64() - G1).abs() < 1e-15);
        assert!((b.to_f64() - G1).abs() < 1e-15);
    }
}
