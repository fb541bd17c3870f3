use rug::Float;

use super::{gamma1, psi};
use crate::error::{Error, Result};
use crate::precision::{euler_gamma, hurwitz_zeta_oracle, ln2, pi, quadrature, MPComplex, PrecisionContext};

/// `z_k = ζ(k) − 1 = ζ(k, 2)` for `k = 0..=kmax` (entries below 2 unused),
/// with `kmax` where `2^-k` drops below the working precision.
fn zeta_minus_one(ctx: &PrecisionContext) -> Result<Vec<Float>> {
    let p = ctx.working_bits();
    let kmax = p as usize + 16;
    let two = Float::with_val(p, 2);
    let mut z = vec![Float::new(p), Float::new(p)];
    for k in 2..=kmax {
        let s = MPComplex::from_i64(p, k as i64);
        z.push(hurwitz_zeta_oracle(&s, &two, ctx)?.re);
    }
    Ok(z)
}

/// `Σ_{j≥n} (−1)^(j+1)/j` for `n ≥ 1`.
fn alternating_tail(n: usize, p: u32) -> Float {
    let mut s = ln2(p);
    for j in 1..n {
        let t = Float::with_val(p, j as u32).recip();
        if j % 2 == 1 {
            s -= t;
        } else {
            s += t;
        }
    }
    s
}

/// Both sides of `2[ζ(2) − γ₁] = γ² + 1 + 2Σ_{k≥2} (−1)^k ζ(k)/(k−1)
/// − Σ_{m≥4} (−1)^m/(m−1) Σ_{k=2}^{m−2} ζ(k)ζ(m−k)` and the auxiliary sums.
#[derive(Clone, Debug)]
pub struct Corollary3 {
    pub lhs: Float,
    pub rhs: Float,
    pub residual: Float,
    /// `Σ_{k≥2} (−1)^k ζ(k)/k`, which equals `γ`.
    pub auxiliary: Float,
    /// Abel limit of `Σ_{k≥1} (−1)^(k+1) ζ(k+1) x^k` as `x → 1⁻`, which is 1.
    pub abel_term: Float,
}

/// Evaluates [`Corollary3`].
///
/// With `ζ(k) = 1 + z_k` every divergent or conditionally convergent part
/// involves only the ones and is summed in closed form (the double series
/// contributes `Σ_{m≥4} (−1)^m (m−3)/(m−1)`, whose Abel value is
/// `3/2 − 2 ln 2`); the remaining parts carry `z_k ~ 2^-k` and converge
/// geometrically.
pub fn corollary3_check(ctx: &PrecisionContext) -> Result<Corollary3> {
    let p = ctx.working_bits();
    let z = zeta_minus_one(ctx)?;
    let kmax = z.len() - 1;
    let g = euler_gamma(p);
    let l2 = ln2(p);
    let sign = |k: usize| if k % 2 == 0 { 1i32 } else { -1 };

    // 2Σ (−1)^k ζ(k)/(k−1) = 2 ln 2 + 2Σ (−1)^k z_k/(k−1)
    let mut single = Float::with_val(p, &l2);
    for k in 2..=kmax {
        single += Float::with_val(p, &z[k] * sign(k)) / (k as u32 - 1);
    }
    single *= 2u32;

    // Σ_m (−1)^m/(m−1) [(m−3) + 2Σ_k z_k + Σ_k z_k z_{m−k}]
    let ones = Float::with_val(p, 1.5) - Float::with_val(p, &l2 * 2u32);
    let mut linear = Float::new(p);
    for k in 2..=kmax {
        linear += Float::with_val(p, &z[k] * alternating_tail(k + 1, p));
    }
    linear *= 2u32;
    let mut quad = Float::new(p);
    for m in 4..=kmax + 2 {
        let mut inner = Float::new(p);
        for k in 2..=m - 2 {
            if k <= kmax && m - k <= kmax {
                inner += Float::with_val(p, &z[k] * &z[m - k]);
            }
        }
        quad += inner * sign(m) / (m as u32 - 1);
    }
    let double = ones + linear + quad;

    let rhs = Float::with_val(p, g.square_ref()) + 1u32 + single - double;
    let g1 = gamma1(&Float::with_val(p, 1), ctx)?.value;
    let z2 = Float::with_val(p, pi(p).square() / 6u32);
    let lhs = (z2 - g1) * 2u32;
    let residual = Float::with_val(p, &lhs - &rhs).abs();

    // Σ (−1)^k/k over k ≥ 2 is 1 − ln 2
    let mut auxiliary = Float::with_val(p, 1u32 - &l2);
    for k in 2..=kmax {
        auxiliary += Float::with_val(p, &z[k] * sign(k)) / k as u32;
    }
    // Abel value of Σ (−1)^(k+1) x^k is 1/2
    let mut abel_term = Float::with_val(p, 0.5);
    for k in 1..kmax {
        abel_term -= Float::with_val(p, &z[k + 1] * sign(k));
    }
    Ok(Corollary3 { lhs, rhs, residual, auxiliary, abel_term })
}

/// `C = Σ_{k≥1} (−1)^(k+1) ζ(k+1)/k ≈ 1.2577468869` by one of four
/// representations:
///
/// 1. the zeta series itself, as `ln 2 + Σ (−1)^(k+1)(ζ(k+1) − 1)/k`;
/// 2. `Σ_{j≥1} ln(1+1/j)/j`, summed directly to `j = 32` with the rest
///    `Σ_k (−1)^(k+1) ζ(k+1, 33)/k`;
/// 3. `∫_0^∞ [γ + ψ(1+e^-t)] dt = ∫_0^1 [γ + ψ(1+x)]/x dx`;
/// 4. `∫_0^∞ [γ + ψ(e^-t) + e^t] dt = ∫_0^1 [γ + ψ(x) + 1/x]/x dx`, with
///    `ψ(x)` evaluated directly at precision raised by `log2(1/x)` bits.
pub fn log_sum_constant(representation: u32, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.working_bits();
    let g = euler_gamma(p);
    match representation {
        1 => {
            let z = zeta_minus_one(ctx)?;
            let mut s = ln2(p);
            for k in 1..z.len() - 1 {
                let t = Float::with_val(p, &z[k + 1]) / k as u32;
                if k % 2 == 1 {
                    s += t;
                } else {
                    s -= t;
                }
            }
            Ok(s)
        }
        2 => {
            const J: u32 = 32;
            let mut s = Float::new(p);
            for j in 1..=J {
                let x = Float::with_val(p, Float::with_val(p, j).recip() + 1u32).ln();
                s += x / j;
            }
            let a = Float::with_val(p, J + 1);
            let floor = -(p as f64) - 8.0;
            for k in 1u32.. {
                let zk = hurwitz_zeta_oracle(&MPComplex::from_i64(p, k as i64 + 1), &a, ctx)?.re;
                let t = zk / k;
                let small = t.clone().abs().log2().to_f64() < floor;
                if k % 2 == 1 {
                    s += t;
                } else {
                    s -= t;
                }
                if small {
                    break;
                }
            }
            Ok(s)
        }
        3 => quadrature(
            |x, _| {
                let x1 = Float::with_val(p, x + 1u32);
                Ok((psi(&x1, p)? + &g) / x)
            },
            ctx,
        ),
        4 => quadrature(
            |x, _| {
                let extra = (-x.clone().log2().to_f64()).max(0.0).ceil() as u32 + 16;
                let q = p + extra;
                let xq = Float::with_val(q, x);
                let v = psi(&xq, q)? + Float::with_val(q, xq.recip_ref()) + &g;
                Ok(Float::with_val(p, v / &xq))
            },
            ctx,
        ),
        r => Err(Error::Range(format!("representations are numbered 1..=4, got {r}"))),
    }
}

/// `η₁ = γ² + 2γ₁`, the linear Laurent coefficient of `−ζ'/ζ − 1/(s−1)`.
pub fn eta1(ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.working_bits();
    let g1 = gamma1(&Float::with_val(p, 1), ctx)?.value;
    Ok(Float::with_val(p, euler_gamma(p).square_ref()) + g1 * 2u32)
}

/// `η₁` fitted from the oracle alone: with `F(s) = (s−1)ζ(s)`, `F(1) = 1`,
/// `η₁ = F'(1)² − F''(1)`, the derivatives from central differences at
/// `h = 2^-8, 2^-9, 2^-10` extrapolated in `h²`.
pub fn eta1_fit(ctx: &PrecisionContext) -> Result<Float> {
    let hi = ctx.raised(48);
    let p = hi.working_bits();
    let one = Float::with_val(p, 1);
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    let mut xs = Vec::new();
    for e in [8, 9, 10] {
        let h = Float::with_val(p, Float::i_exp(1, -e));
        let fp = hurwitz_zeta_oracle(&MPComplex::from_real(Float::with_val(p, &one + &h)), &one, &hi)?.re * &h;
        let fm = -(hurwitz_zeta_oracle(&MPComplex::from_real(Float::with_val(p, &one - &h)), &one, &hi)?.re * &h);
        d1.push(Float::with_val(p, &fp - &fm) / Float::with_val(p, &h * 2u32));
        d2.push((Float::with_val(p, &fp + &fm) - 2u32) / Float::with_val(p, h.square_ref()));
        xs.push(Float::with_val(p, h.square_ref()));
    }
    let extrapolate = |y: &[Float]| {
        let mut c0 = Float::new(p);
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let den = Float::with_val(p, &xs[i] - &xs[j]) * Float::with_val(p, &xs[i] - &xs[k]);
            c0 += Float::with_val(p, &xs[j] * &xs[k]) * &y[i] / den;
        }
        c0
    };
    let f1 = extrapolate(&d1);
    let f2 = extrapolate(&d2);
    Ok(Float::with_val(ctx.working_bits(), f1.square() - f2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corollary3_and_auxiliaries() {
        let ctx = PrecisionContext::new(64).unwrap();
        let c = corollary3_check(&ctx).unwrap();
        assert!(c.residual.to_f64() < 1e-19, "{}", c.residual.to_f64());
        assert!(Float::with_val(128, &c.auxiliary - euler_gamma(128)).abs() < 1e-30);
        assert!((c.abel_term.to_f64() - 1.0).abs() < 1e-30);
    }

    #[test]
    fn log_sum_representations() {
        let ctx = PrecisionContext::new(64).unwrap();
        let v: Vec<f64> = (1..=4).map(|r| log_sum_constant(r, &ctx).unwrap().to_f64()).collect();
        for x in &v {
            assert!((x - 1.257_746_886_94).abs() < 1e-10, "{v:?}");
            assert!((x - v[0]).abs() < 1e-15, "{v:?}");
        }
        assert!(log_sum_constant(5, &ctx).is_err());
    }

    #[test]
    fn eta1_two_ways() {
        let ctx = PrecisionContext::new(64).unwrap();
        let a = eta1(&ctx).unwrap();
        let b = eta1_fit(&ctx).unwrap();
        assert!(a > 0);
        assert!(Float::with_val(128, &a - &b).abs() < 1e-15);
        let g = 0.577_215_664_901_532_9f64;
        assert!((a.to_f64() - (g * g - 2.0 * 0.072_815_845_483_676_72)).abs() < 1e-15);
    }
}
