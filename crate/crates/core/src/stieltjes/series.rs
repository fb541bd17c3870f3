use rug::{Float, Integer};

use super::{check_a, psi, psi_n, shift_terms, steps_to, Method, StieltjesResult};
use crate::error::{Error, Result};
use crate::exact;
use crate::precision::{MPComplex, PrecisionContext};
use crate::series::{guarded, log2_float, shift_target, Accumulator, Decay, Pass, SeriesEvaluation};

fn result(order: u32, a: &Float, e: SeriesEvaluation, method: Method) -> StieltjesResult {
    StieltjesResult {
        order,
        a: a.clone(),
        value: e.value.re,
        method,
        tail_estimate: e.tail_estimate,
        terms_used: e.terms_used,
    }
}

/// `γ₀(a) = −ψ(a)`.
pub fn gamma0(a: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_a(a)?;
    Ok(-psi(a, ctx.working_bits())?)
}

/// `γ₁(a)` from
/// `−γ₁(a) = ½[ψ²(a) − ψ'(a)] + Σ_{k≥1} (−1)^k B_k^(k)/(k² (a)_k)`.
pub fn gamma1(a: &Float, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    check_a(a)?;
    let e = guarded(ctx, |p| {
        let (direct, a2) = shift_terms(a, steps_to(a, shift_target(p)), 1, p);
        let ps = psi(&a2, p)?;
        let head = Float::with_val(p, ps.square_ref()) - psi_n(1, &a2, p)?;
        let head = MPComplex::from_real(head / 2u32);
        let mut acc = Accumulator::new(head, p, ctx, Decay::Algebraic(a2.to_f64() + 2.0));
        // r = k!/(a')_k
        let mut r = Float::with_val(p, 1);
        let mut done = false;
        let mut k = 0u32;
        while !done && !acc.exhausted() {
            k += 1;
            r *= k;
            r /= Float::with_val(p, &a2 + (k - 1));
            let b = Float::with_val(p, &exact::norlund_number_scaled(k as usize));
            let mut t = b * &r / (k as u64 * k as u64);
            if k % 2 == 1 {
                t = -t;
            }
            done = acc.push(&MPComplex::from_real(t.clone()), t.clone().abs().log2().to_f64());
        }
        let pass = Pass::from_acc(&acc, done);
        let v = Float::with_val(p, &direct - &acc.sum.re);
        let scale = acc.scale.max(log2_float(&direct));
        Ok((MPComplex::from_real(v), scale, pass))
    })?;
    Ok(result(1, a, e, Method::Series))
}

/// Cap on the outer sum of [`gamma1_binomial`].
const BINOMIAL_TERMS: usize = 60;

/// `f(x) = ln x / x` at `x = a + k`, `k < n`.
fn log_over(a: &Float, n: usize, p: u32) -> Vec<Float> {
    (0..n)
        .map(|k| {
            let x = Float::with_val(p, a + k as u32);
            Float::with_val(p, x.ln_ref()) / x
        })
        .collect()
}

/// `Σ_{k<n} (−1)^k C(n−1,k) f(a+k)` for `n = 1..=count` and `log2` of
/// `Σ C(n−1,k)|f(a+k)|`.
fn differences(f: &[Float], count: usize, p: u32) -> Vec<(Float, f64)> {
    let mut out = Vec::with_capacity(count);
    for n in 1..=count {
        let m = n - 1;
        let mut d = Float::new(p);
        let mut mag = Float::new(p);
        let mut c = Integer::from(1);
        for (k, fk) in f.iter().enumerate().take(n) {
            let t = Float::with_val(p, fk * &c);
            mag += Float::with_val(p, t.abs_ref());
            if k % 2 == 0 {
                d += t;
            } else {
                d -= t;
            }
            c *= (m - k) as u64;
            c /= (k + 1) as u64;
        }
        let scale = if mag.is_zero() { f64::NEG_INFINITY } else { mag.log2().to_f64() };
        out.push((d, scale));
    }
    out
}

/// The outer terms `p_{n+1} Σ_{k<n} (−1)^k C(n−1,k) ln(k+a)/(k+a)` of the
/// binomial series, `n = 1..=count`, without any shift of `a`.
pub fn gamma1_binomial_terms(a: &Float, count: usize, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    check_a(a)?;
    let p = ctx.working_bits() + count as u32 + 8;
    let f = log_over(a, count, p);
    differences(&f, count, p)
        .into_iter()
        .enumerate()
        .map(|(i, (d, _))| {
            let c = Float::with_val(p, &exact::p_constant(i + 2)?);
            Ok(Float::with_val(ctx.working_bits(), c * d))
        })
        .collect()
}

/// `γ₁(a)` from
/// `½ln²a + γ₁(a) = Σ_{n≥1} (−1)^(n−1)/n! [B_n^(n)+nB_{n−1}^(n−1)] Σ_{k<n} (−1)^k C(n−1,k) ln(k+a)/(k+a)`.
///
/// The coefficient is `p_{n+1}`. The inner sums are finite differences that
/// lose about `n` bits, so at most 60 outer terms are used, at precision
/// raised by as many bits, after shifting `a` far enough for 60 terms to
/// reach the working precision.
pub fn gamma1_binomial(a: &Float, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    check_a(a)?;
    let wp = ctx.working_bits();
    let cap = BINOMIAL_TERMS.min(ctx.max_terms());
    let q = wp + cap as u32 + 16;
    let (direct, a2) = shift_terms(a, steps_to(a, 0.8 * wp as f64), 1, q);
    let f = log_over(&a2, cap, q);
    let diffs = differences(&f, cap, q);
    let half_sq = Float::with_val(q, Float::with_val(q, a2.ln_ref()).square()) / 2u32;
    let mut acc = Accumulator::new(MPComplex::from_real(-half_sq), wp, ctx, Decay::Algebraic(a2.to_f64() + 2.0));
    let mut done = false;
    for (i, (d, scale)) in diffs.iter().enumerate() {
        let c = Float::with_val(q, &exact::p_constant(i + 2)?);
        let t = Float::with_val(q, &c * d);
        // rounding error of the difference against the accuracy asked for
        let err = scale + log2_float(&c) - q as f64;
        if err > acc.sum.log2_abs() - wp as f64 {
            return Err(Error::PrecisionLoss(format!(
                "finite difference of order {i} lost {:.0} bits",
                scale - log2_float(d)
            )));
        }
        done = acc.push(&MPComplex::from_real(t), -f64::INFINITY);
        if done {
            break;
        }
    }
    let value = Float::with_val(wp, &direct + &acc.sum.re);
    let eval = SeriesEvaluation {
        value: MPComplex::from_real(value),
        terms_used: acc.terms,
        tail_estimate: acc.tail(wp),
        converged: done,
        precision_bits: ctx.target_bits(),
    };
    if !done {
        return Err(Error::NonConvergence(Box::new(eval)));
    }
    Ok(result(1, a, eval, Method::BinomialSeries))
}

/// `γ₂(a)` from
/// `(1/3)[−ψ³(a) + 3ψ(a)ψ'(a) − ψ''(a)] + 2 Σ_k (−1)^k/k² · ∂_αB_k^(α)|_{α=k}/(a)_k
///  + 2 Σ_k (−1)^k/k³ · B_k^(k)/(a)_k · [−1 + γk + kψ(k) − kψ(k+a)]`.
pub fn gamma2(a: &Float, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    check_a(a)?;
    let e = guarded(ctx, |p| {
        let (direct, a2) = shift_terms(a, steps_to(a, shift_target(p)), 2, p);
        let ps = psi(&a2, p)?;
        let p1 = psi_n(1, &a2, p)?;
        let p2 = psi_n(2, &a2, p)?;
        let cube = Float::with_val(p, ps.clone().square() * &ps);
        let head = (Float::with_val(p, &ps * &p1) * 3u32 - cube - &p2) / 3u32;
        let head_scale = log2_float(&head).max(3.0 * log2_float(&ps));
        let mut acc = Accumulator::new(MPComplex::from_real(head), p, ctx, Decay::Algebraic(a2.to_f64() + 2.0));
        let mut r = Float::with_val(p, 1);
        // ψ(k+a') and γk + kψ(k) = kH_{k−1}
        let mut psi_ka = ps.clone();
        let mut h = Float::new(p);
        let mut done = false;
        let mut k = 0u32;
        while !done && !acc.exhausted() {
            k += 1;
            psi_ka += Float::with_val(p, &a2 + (k - 1)).recip();
            if k > 1 {
                h += Float::with_val(p, k - 1).recip();
            }
            r *= k;
            r /= Float::with_val(p, &a2 + (k - 1));
            let kk = k as usize;
            let alpha = rug::Rational::from(kk);
            let d = exact::norlund_poly_dalpha(kk).eval(&alpha) / exact::factorial(kk);
            let d = Float::with_val(p, &d);
            let b = Float::with_val(p, &exact::norlund_number_scaled(kk));
            let bracket = Float::with_val(p, &h * k) - Float::with_val(p, &psi_ka * k) - 1u32;
            let t2 = d / (k as u64 * k as u64);
            let t3 = b * bracket / (k as u64 * k as u64 * k as u64);
            let mut t = (t2 + t3) * &r * 2u32;
            if k % 2 == 1 {
                t = -t;
            }
            done = acc.push(&MPComplex::from_real(t.clone()), log2_float(&t) + 8.0);
        }
        let pass = Pass::from_acc(&acc, done);
        let v = Float::with_val(p, &direct + &acc.sum.re);
        let scale = acc.scale.max(head_scale).max(log2_float(&direct));
        Ok((MPComplex::from_real(v), scale, pass))
    })?;
    Ok(result(2, a, e, Method::Series))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{euler_gamma, ln2};

    const G1_DIGITS: &str = "-0.0728158454836767248605863758749547";
    const G2: f64 = -0.009_690_363_192_872_318;

    fn f(x: f64) -> Float {
        Float::with_val(192, x)
    }

    #[test]
    fn gamma0_values() {
        let ctx = PrecisionContext::default();
        let g = euler_gamma(192);
        assert!(Float::with_val(192, gamma0(&f(1.0), &ctx).unwrap() - &g).abs() < 1e-50);
        assert!(Float::with_val(192, gamma0(&f(2.0), &ctx).unwrap() - (g.clone() - 1u32)).abs() < 1e-50);
        let want = g + ln2(192) * 2u32;
        assert!(Float::with_val(192, gamma0(&f(0.5), &ctx).unwrap() - want).abs() < 1e-50);
        assert!(matches!(gamma0(&f(0.0), &ctx), Err(Error::Domain(_))));
    }

    #[test]
    fn gamma1_series_value() {
        let ctx = PrecisionContext::default();
        let r = gamma1(&f(1.0), &ctx).unwrap();
        let want = Float::with_val(192, Float::parse(G1_DIGITS).unwrap());
        assert!(Float::with_val(192, &r.value - &want).abs() < 1e-28);
        assert_eq!(r.method, Method::Series);
        // shift relation between a and a+1
        let a = gamma1(&f(0.5), &ctx).unwrap().value;
        let b = gamma1(&f(1.5), &ctx).unwrap().value;
        let l = Float::with_val(192, f(0.5).ln() / f(0.5));
        assert!(Float::with_val(192, a - b - l).abs() < 1e-50);
    }

    #[test]
    fn gamma1_binomial_agrees() {
        let ctx = PrecisionContext::default();
        for x in [1.0, 3.0] {
            let s = gamma1(&f(x), &ctx).unwrap().value;
            let b = gamma1_binomial(&f(x), &ctx).unwrap();
            assert!(Float::with_val(192, &s - &b.value).abs() < 1e-38, "a={x}");
        }
        let terms = gamma1_binomial_terms(&f(1.0), 4, &ctx).unwrap();
        assert!(terms[0].is_zero());
    }

    #[test]
    fn gamma2_value() {
        let ctx = PrecisionContext::default();
        let r = gamma2(&f(1.0), &ctx).unwrap();
        assert!((r.value.to_f64() - G2).abs() < 1e-17, "{}", r.value.to_f64());
    }
}
