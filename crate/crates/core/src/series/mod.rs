//! Series built from Nörlund coefficients: the Hurwitz and Riemann zeta
//! functions, polygamma, digamma and log-gamma functions, Dirichlet
//! L-functions, Euler sums and the Rubinstein coefficients `α_k(s)`.
//!
//! Every Beta-type series converges only algebraically in its Beta argument,
//! roughly like `k^(−1−Re a)`. Each one is therefore evaluated after an exact
//! recurrence moves that argument to `a' = a + N` with `a'` proportional to
//! the working precision, where the terms fall off geometrically up to
//! `k ≈ a'`. Series that terminate (zeta at nonpositive integers) are summed
//! as they are.

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{MPComplex, PrecisionContext};

mod dirichlet;
mod euler;
mod lngamma;
mod polygamma;
mod rubinstein;
mod zeta;

pub(crate) use zeta::log2_float;

pub use dirichlet::{beta_odd_value, dirichlet_beta, dirichlet_l, DirichletCharacter};
pub use euler::{
    euler_sum_zeta3, euler_sum_zeta3_offset, euler_sum_zeta3_tail, euler_sum_zeta4, euler_sum_zeta4_tail,
};
pub use lngamma::{log_gamma_series, log_ratio_series, LogRatioVariant};
pub use polygamma::{digamma_series, polygamma_series, trigamma_terms};
pub use rubinstein::{
    alpha_coeff, alpha_coeff_exact, alpha_coeff_prime, alpha_coeff_prime_exact, alpha_coeff_prime_via_dalpha,
    alpha_poly,
};
pub use zeta::{
    half_argument_residual, hurwitz_zeta, hurwitz_zeta_alt, hurwitz_zeta_regular, partial_a_identity_check,
    partial_a_rhs, power_gamma_series, riemann_zeta,
};

/// Value of a series together with how it was truncated.
#[derive(Clone, Debug)]
pub struct SeriesEvaluation {
    pub value: MPComplex,
    /// Terms of the series proper; the finitely many terms of an argument
    /// shift are not counted.
    pub terms_used: usize,
    /// Estimated absolute size of the discarded tail.
    pub tail_estimate: Float,
    pub converged: bool,
    /// Target precision the value was computed for.
    pub precision_bits: u32,
}

impl SeriesEvaluation {
    /// A value that needed no truncation.
    pub fn exact(value: MPComplex, terms_used: usize, precision_bits: u32) -> Self {
        let p = value.prec();
        SeriesEvaluation { value, terms_used, tail_estimate: Float::new(p), converged: true, precision_bits }
    }

    /// The real part, for series whose value is real.
    pub fn real(&self) -> &Float {
        &self.value.re
    }
}

/// How the magnitude of the terms falls off, for estimating the tail.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Decay {
    /// `|t_k| ~ k^(−e)` with `e > 1`.
    Algebraic(f64),
}

/// Running sum with the truncation policy of [`PrecisionContext`].
///
/// A sum is accepted once `tail_confirm` consecutive terms are each below
/// `2^-bits·|sum|` and the estimated tail is below the same bound.
pub(crate) struct Accumulator {
    pub sum: MPComplex,
    pub terms: usize,
    pub scale: f64,
    bits: u32,
    small_run: usize,
    confirm: usize,
    max_terms: usize,
    decay: Decay,
    last: f64,
}

impl Accumulator {
    pub fn new(init: MPComplex, bits: u32, ctx: &PrecisionContext, decay: Decay) -> Self {
        let scale = init.log2_abs();
        Accumulator {
            sum: init,
            terms: 0,
            scale,
            bits,
            small_run: 0,
            confirm: ctx.tail_confirm(),
            max_terms: ctx.max_terms(),
            decay,
            last: f64::NEG_INFINITY,
        }
    }

    /// `log2` of the tail estimate after the terms added so far.
    pub fn tail_log2(&self) -> f64 {
        let Decay::Algebraic(e) = self.decay;
        let k = self.terms.max(1) as f64;
        self.last + (k / (e - 1.0)).max(1.0).log2()
    }

    /// Adds a term whose own rounding may involve magnitudes up to
    /// `2^term_scale`. Returns `true` once the sum is accepted.
    pub fn push(&mut self, t: &MPComplex, term_scale: f64) -> bool {
        self.sum = &self.sum + t;
        self.terms += 1;
        let lt = t.log2_abs();
        self.last = lt;
        self.scale = self.scale.max(term_scale).max(self.sum.log2_abs());
        let bound = self.sum.log2_abs() - self.bits as f64;
        if lt <= bound || t.is_zero() {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        self.small_run >= self.confirm && self.tail_log2() <= bound
    }

    pub fn exhausted(&self) -> bool {
        self.terms >= self.max_terms
    }

    pub fn tail(&self, prec: u32) -> Float {
        if self.last == f64::NEG_INFINITY {
            return Float::new(prec);
        }
        Float::with_val(prec, self.tail_log2()).exp2()
    }
}

/// Bookkeeping of one pass of a guarded evaluation.
#[derive(Clone, Debug)]
pub(crate) struct Pass {
    pub terms: usize,
    pub tail: Float,
    pub converged: bool,
}

impl Pass {
    pub fn from_acc(acc: &Accumulator, converged: bool) -> Self {
        Pass { terms: acc.terms, tail: acc.tail(64), converged }
    }

    pub fn exact(terms: usize) -> Self {
        Pass { terms, tail: Float::new(64), converged: true }
    }
}

/// Runs `f(p)` starting at the working precision and repeats with the lost
/// bits added whenever the value is much smaller than the magnitudes that
/// entered it. `f` returns the value, `log2` of that magnitude scale and the
/// truncation bookkeeping.
pub(crate) fn guarded(
    ctx: &PrecisionContext,
    mut f: impl FnMut(u32) -> Result<(MPComplex, f64, Pass)>,
) -> Result<SeriesEvaluation> {
    let wp = ctx.working_bits();
    let slack = ctx.guard_bits().saturating_sub(8) as f64;
    let mut p = wp;
    let mut last = None;
    for _ in 0..4 {
        let (v, scale, pass) = f(p)?;
        let lost = (scale - v.log2_abs()).max(0.0);
        let enough = !lost.is_finite() || v.is_zero() || lost <= slack + (p - wp) as f64;
        last = Some((v, pass));
        if enough {
            break;
        }
        let next = wp + lost.ceil() as u32 + 8;
        if next > 4 * wp + 256 {
            break;
        }
        p = next.max(p + 16);
    }
    let (v, pass) = last.expect("loop ran");
    let value = v.with_prec(wp);
    let mut tail = Float::with_val(wp, &pass.tail);
    if pass.tail.is_zero() {
        tail = Float::new(wp);
    }
    let eval = SeriesEvaluation {
        value,
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

/// `Re a'` a Beta argument is shifted to before a series in it is summed.
pub(crate) fn shift_target(p: u32) -> f64 {
    (0.3 * p as f64).ceil() + 8.0
}

/// Unit steps that bring `Re a` to [`shift_target`].
pub(crate) fn shift_steps(a: &MPComplex, p: u32) -> usize {
    let r = a.re.to_f64();
    let t = shift_target(p);
    if r >= t {
        0
    } else {
        (t - r).ceil() as usize
    }
}

pub(crate) fn check_re_positive(a: &MPComplex, what: &str) -> Result<()> {
    if a.re <= 0 || !a.is_finite() {
        return Err(Error::Domain(format!("{what} needs Re > 0, got {}", a.to_decimal(12))));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accumulator_accepts_geometric_series() {
        let ctx = PrecisionContext::new(64).unwrap();
        let p = ctx.working_bits();
        let mut acc = Accumulator::new(MPComplex::one(p), p, &ctx, Decay::Algebraic(100.0));
        let mut t = MPComplex::one(p);
        let mut done = false;
        while !done && !acc.exhausted() {
            t = t.div_i64(2);
            done = acc.push(&t, 0.0);
        }
        assert!(done);
        assert!((acc.sum.re.to_f64() - 2.0).abs() < 1e-15);
        assert!(acc.terms >= p as usize);
    }

    #[test]
    fn accumulator_stops_at_max_terms() {
        let ctx = PrecisionContext::new(64).unwrap().with_max_terms(50).unwrap();
        let p = ctx.working_bits();
        let mut acc = Accumulator::new(MPComplex::zero(p), p, &ctx, Decay::Algebraic(2.0));
        let mut k = 1i64;
        while !acc.exhausted() {
            assert!(!acc.push(&MPComplex::from_i64(p, 1).div_i64(k * k), 0.0));
            k += 1;
        }
        assert_eq!(acc.terms, 50);
        // tail of Σ 1/k² after 50 terms is about 1/50
        assert!((acc.tail(53).to_f64() - 0.02).abs() < 0.005);
    }
}
