//! Euler–Maclaurin evaluation of the Hurwitz zeta function, used as ground
//! truth for every series in the crate.
//!
//! `ζ(s,a) = Σ_{n<N} (n+a)^(-s) + (N+a)^(1-s)/(s-1) + (N+a)^(-s)/2
//!          + Σ_{k=1}^{M} B_{2k}/(2k)! (s)_{2k-1} (N+a)^(-s-2k+1) + R`
//!
//! with `|R| ≤ 4|(s)_{2M}|/(2π)^{2M} · (N+a)^(-σ-2M+1)/(σ+2M-1)` for real
//! `a > 0` and `σ + 2M > 1`. `N` and `M` are chosen so this bound sits below
//! the requested relative tolerance.

use rug::Float;

use super::complex::MPComplex;
use super::context::PrecisionContext;
use super::gamma::with_cancellation_guard;
use crate::error::{Error, Result};
use crate::exact;

/// `log2` of the remainder bound for given `N`, `M`.
fn log2_bound(s: (f64, f64), a: f64, n: usize, m: usize) -> f64 {
    let (sigma, t) = s;
    let e = sigma + 2.0 * m as f64 - 1.0;
    if e <= 0.0 {
        return f64::INFINITY;
    }
    let mut poch = 0.0;
    for j in 0..2 * m {
        poch += ((sigma + j as f64).hypot(t)).log2();
    }
    2.0 + poch - 2.0 * m as f64 * (2.0 * std::f64::consts::PI).log2() - e * (n as f64 + a).log2() - e.log2()
}

/// Cheapest `(N, M)` whose bound is at most `2^goal`.
fn choose_parameters(s: (f64, f64), a: f64, goal: f64) -> (usize, usize) {
    let mut best: Option<(usize, usize, f64)> = None;
    let mut n = 1usize;
    while n < 1 << 20 {
        let mut m = 1usize;
        let mut prev = f64::INFINITY;
        while m < 4096 {
            let b = log2_bound(s, a, n, m);
            if b <= goal {
                let cost = n as f64 + 3.0 * m as f64;
                if best.is_none_or(|(_, _, c)| cost < c) {
                    best = Some((n, m, cost));
                }
                break;
            }
            if b > prev && b.is_finite() {
                break;
            }
            prev = b;
            m += 1;
        }
        if let Some((bn, _, c)) = best {
            if n as f64 > c || n > 4 * bn + 64 {
                break;
            }
        }
        n += 1 + n / 8;
    }
    let (n, m, _) = best.expect("Euler–Maclaurin parameters exist for real a > 0");
    (n, m)
}

fn euler_maclaurin(s: &MPComplex, a: &Float, n: usize, m: usize, p: u32) -> (MPComplex, f64) {
    let s = s.with_prec(p);
    let a = Float::with_val(p, a);
    let neg_s = -&s;
    let mut sum = MPComplex::zero(p);
    let mut scale = f64::NEG_INFINITY;
    for j in 0..n {
        let x = MPComplex::from_real(Float::with_val(p, &a + j as u64));
        let t = x.pow(&neg_s);
        scale = scale.max(t.log2_abs());
        sum = &sum + &t;
    }
    let x = MPComplex::from_real(Float::with_val(p, &a + n as u64));
    let x_neg_s = x.pow(&neg_s);
    let one_minus_s = (&MPComplex::one(p) - &s).clone();
    let integral = &(&x_neg_s * &x) / &(-&one_minus_s);
    scale = scale.max(integral.log2_abs());
    sum = &sum + &integral;
    sum = &sum + &x_neg_s.div_i64(2);
    let xinv = x.recip();
    let xinv2 = xinv.sqr();
    // (s)_{2k−1} x^(−s−2k+1), starting at k=1: s·x^(−s−1)
    let mut poch_pow = &(&s * &x_neg_s) * &xinv;
    for k in 1..=m {
        let c = Float::with_val(p, &exact::bernoulli_number(2 * k))
            / Float::with_val(p, &exact::factorial(2 * k));
        let t = poch_pow.mul_real(&c);
        scale = scale.max(t.log2_abs());
        sum = &sum + &t;
        // advance to k+1: multiply by (s+2k−1)(s+2k)/x²
        let f = &s.add_i64(2 * k as i64 - 1) * &s.add_i64(2 * k as i64);
        poch_pow = &(&poch_pow * &f) * &xinv2;
    }
    (sum, scale)
}

/// Independent reference value of `ζ(s,a)` for real `a > 0`.
pub fn hurwitz_zeta_oracle(s: &MPComplex, a: &Float, ctx: &PrecisionContext) -> Result<MPComplex> {
    if s.is_real() && s.re == 1 {
        return Err(Error::Pole("ζ(s,a) has a pole at s = 1".into()));
    }
    if *a <= 0 {
        return Err(Error::Domain(format!("oracle needs real a > 0, got {}", a.to_f64())));
    }
    let target = ctx.working_bits();
    let sigma = s.re.to_f64();
    let t = s.im.to_f64();
    let af = a.to_f64();
    let goal_rel = -(target as f64) - 4.0;
    let mut magnitude = 0.0f64;
    let mut result = None;
    for _ in 0..3 {
        let (n, m) = choose_parameters((sigma, t), af, goal_rel + magnitude);
        let v = with_cancellation_guard(target, |p| {
            let p = p + 8 + (usize::BITS - n.leading_zeros());
            Ok(euler_maclaurin(s, a, n, m, p))
        })?;
        let mag = v.log2_abs().max(-(target as f64));
        let settled = mag >= magnitude - 1.0;
        result = Some(v);
        if settled {
            break;
        }
        magnitude = mag;
    }
    Ok(result.expect("loop ran"))
}

/// `ζ(s)` from the oracle at `a = 1`.
pub fn riemann_zeta_oracle(s: &MPComplex, ctx: &PrecisionContext) -> Result<MPComplex> {
    hurwitz_zeta_oracle(s, &Float::with_val(ctx.working_bits(), 1), ctx)
}
