use rug::Float;

use super::{guarded, shift_steps, Accumulator, Decay, Pass, SeriesEvaluation};
use crate::error::{Error, Result};
use crate::exact::{self, ExactCache};
use crate::precision::{digamma_p, euler_gamma, gamma_p, pi, rgamma_p, MPComplex, PrecisionContext};

/// `ln Γ(x+1)` for `Re x > −1` from
/// `Σ_k (−1)^(k+1)/k! · B_k^(k)(1) · [1/(k−1) − x/k − Γ(k−1)Γ(x+1)/Γ(k+x)]`.
///
/// The coefficients are `p_{k+1}`. The `k = 0` and `k = 1` brackets are their
/// limits `−x[ψ(x)+γ]+x−1` and `ψ(x+1)−x+γ`. The parts `Σ_{k≥2} p_{k+1}/(k−1)`
/// and `Σ_{k≥2} p_{k+1}/k` converge like `1/(K ln²K)`, so they enter through
/// their sums `½ln(2π) − ½ − γ/2` and `γ − ½`; the remaining Beta-type part is
/// summed after shifting `x` up with `ln Γ(x+1) = ln Γ(x+N+1) − Σ_{j=1}^N ln(x+j)`.
pub fn log_gamma_series(x: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    if x.re <= -1 || !x.is_finite() {
        return Err(Error::Domain(format!("ln Γ(x+1) series needs Re x > −1, got {}", x.to_decimal(12))));
    }
    let wp = ctx.working_bits();
    if x.is_real() && (x.re == 0 || x.re == 1) {
        // every bracket vanishes
        return Ok(SeriesEvaluation::exact(MPComplex::zero(wp), 0, ctx.target_bits()));
    }
    guarded(ctx, |p| {
        let xp = x.with_prec(p);
        let one = xp.add_i64(1);
        let shift = shift_steps(&one, p);
        let mut direct = MPComplex::zero(p);
        let mut scale = f64::NEG_INFINITY;
        for j in 1..=shift {
            let l = xp.add_i64(j as i64).ln();
            scale = scale.max(l.log2_abs());
            direct = &direct - &l;
        }
        let x2 = xp.add_i64(shift as i64);
        let g = euler_gamma(p);
        let half = Float::with_val(p, 0.5);
        // k = 0: x[ψ(x)+γ] − x + 1 with xψ(x) = xψ(x+1) − 1
        let psi1 = digamma_p(&x2.add_i64(1), p)?;
        let t0 = &(&x2 * &psi1.add_real(&g)) - &x2;
        // k = 1: ½[ψ(x+1) − x + γ]
        let t1 = (&psi1 - &x2).add_real(&g).mul_real(&half);
        let ln2pi = Float::with_val(p, pi(p) * 2u32).ln();
        let c1 = Float::with_val(p, &ln2pi - Float::with_val(p, 1u32 + &g)) * &half;
        let c2 = Float::with_val(p, &g - &half);
        let head = (&t0 + &t1).add_real(&c1);
        let head = &head - &x2.mul_real(&c2);
        scale = scale.max(t0.log2_abs()).max(t1.log2_abs()).max(head.log2_abs());
        // β_k = Γ(k−1)Γ(x+1)/Γ(k+x) = (k−2)!/(x+1)_{k−1}
        let mut beta = x2.add_i64(1).recip();
        let decay = Decay::Algebraic(x2.re.to_f64() + 2.0);
        let mut acc = Accumulator::new(MPComplex::zero(p), p, ctx, decay);
        let mut done = false;
        let mut k = 1usize;
        while !done && !acc.exhausted() {
            k += 1;
            if k > 2 {
                beta = &beta.mul_i64(k as i64 - 2) / &x2.add_i64(k as i64 - 1);
            }
            let pc = Float::with_val(p, &exact::p_constant(k + 1)?);
            let t = -beta.mul_real(&pc);
            done = acc.push(&t, t.log2_abs());
        }
        let pass = Pass::from_acc(&acc, done);
        let v = &(&head + &acc.sum) + &direct;
        Ok((v, scale.max(acc.scale), pass))
    })
}

/// Which of the two Nörlund-number series for `ln((x+1)/x)` to sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogRatioVariant {
    /// `Σ_{r≥0} (−1)^r B_r^(r)/(x+1)_{r+1}`.
    NorlundNumbers,
    /// `1/x − 1/(2x(x+1)) − (1/x) Σ_{r≥2} (−1)^r B_r^(r−1)/((r−1)(x+1)_r)`.
    ShiftedOrder,
}

/// `ln((x+1)/x)` for `Re x > 0` from the chosen series.
///
/// Terms decay like `r^(−x−1)/ln r` (first variant) or `r^(−x)/ln²r`
/// (second), so small `x` needs many terms; there is no argument shift. The
/// coefficients are exact rationals, so at most [`ExactCache::limit`] terms
/// are summed before the sum is reported as not converged.
pub fn log_ratio_series(x: &MPComplex, ctx: &PrecisionContext, variant: LogRatioVariant) -> Result<SeriesEvaluation> {
    super::check_re_positive(x, "ln((x+1)/x)")?;
    let p = ctx.working_bits();
    let xp = x.with_prec(p);
    let x1 = xp.add_i64(1);
    let e = x.re.to_f64();
    let ctx = &ctx.clone().with_max_terms(ctx.max_terms().min(ExactCache::global().limit()))?;
    let (v, pass, scale) = match variant {
        LogRatioVariant::NorlundNumbers => {
            // Y_r = r!/(x+1)_{r+1}
            let mut y = x1.recip();
            let mut acc = Accumulator::new(y.clone(), p, ctx, Decay::Algebraic(e + 1.0));
            let mut done = false;
            let mut r = 0usize;
            while !done && !acc.exhausted() {
                r += 1;
                y = &y.mul_i64(r as i64) / &xp.add_i64(r as i64 + 1);
                let b = Float::with_val(p, &exact::norlund_number_scaled(r));
                let t = y.mul_real(&b);
                let t = if r % 2 == 1 { -t } else { t };
                done = acc.push(&t, t.log2_abs());
            }
            (acc.sum.clone(), Pass::from_acc(&acc, done), acc.scale)
        }
        LogRatioVariant::ShiftedOrder => {
            let xr = xp.recip();
            let head = &xr - &(&xr * &x1.recip()).div_i64(2);
            // Z_r = 1/(x+1)_r
            let mut z = &x1 * &x1.add_i64(1);
            z = z.recip();
            let mut acc = Accumulator::new(MPComplex::zero(p), p, ctx, Decay::Algebraic(e.max(1e-3) + 1.0));
            let mut done = false;
            let mut r = 1usize;
            while !done && !acc.exhausted() {
                r += 1;
                if r > 2 {
                    z = &z / &xp.add_i64(r as i64);
                }
                let b = exact::norlund_poly(r).eval(&rug::Rational::from(r - 1)) / rug::Rational::from(r - 1);
                let b = Float::with_val(p, &b);
                let t = z.mul_real(&b);
                let t = if r % 2 == 1 { -t } else { t };
                done = acc.push(&t, t.log2_abs());
            }
            let v = &head - &(&acc.sum * &xr);
            let scale = head.log2_abs().max(acc.scale - xp.log2_abs());
            (v, Pass::from_acc(&acc, done), scale)
        }
    };
    let _ = scale;
    let mut tail = Float::with_val(p, &pass.tail);
    if variant == LogRatioVariant::ShiftedOrder {
        tail /= xp.abs();
    }
    let eval = SeriesEvaluation {
        value: v,
        terms_used: pass.terms,
        tail_estimate: tail,
        converged: pass.converged,
        precision_bits: ctx.target_bits(),
    };
    if !eval.converged {
        return Err(Error::NonConvergence(Box::new(eval)));
    }
    Ok(eval)
}

/// `Γ(x+1)` for comparison in examples and tests.
#[allow(dead_code)]
pub(crate) fn gamma_plus_one(x: &MPComplex, p: u32) -> Result<MPComplex> {
    let _ = rgamma_p;
    gamma_p(&x.add_i64(1), p)
}
