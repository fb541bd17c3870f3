//! Stieltjes constants `γ_n(a)`, the Laurent coefficients of
//! `ζ(s,a) = 1/(s−1) + Σ_n (−1)^n γ_n(a) (s−1)^n/n!`, for `n ≤ 2`.
//!
//! `γ₁` is computed four independent ways (a Nörlund-number series, a
//! binomial-difference series, a ₄F₃ integral and two digamma integrals) and
//! `γ₂` from a second Nörlund series. [`laurent_fit`] supplies reference
//! values from the Euler–Maclaurin oracle alone. The series converge only
//! algebraically in `a`, so they are summed at `a' = a + N` and brought back
//! with `γ_n(a) = γ_n(a+N) + Σ_{j<N} ln^n(a+j)/(a+j)`.

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{digamma_p, polygamma_p, MPComplex};

mod constants;
mod fit;
mod integrals;
mod series;

pub use constants::{corollary3_check, eta1, eta1_fit, log_sum_constant, Corollary3};
pub use fit::laurent_fit;
pub use integrals::{gamma1_hyp, gamma1_quadrature, hyp_integrand, QuadratureVariant};
pub use series::{gamma0, gamma1, gamma1_binomial, gamma1_binomial_terms, gamma2};

/// How a [`StieltjesResult`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Series,
    BinomialSeries,
    Quadrature,
    LaurentFit,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Series => "series",
            Method::BinomialSeries => "binomial_series",
            Method::Quadrature => "quadrature",
            Method::LaurentFit => "laurent_fit",
        })
    }
}

/// A value of `γ_n(a)` and how far it can be trusted.
#[derive(Clone, Debug)]
pub struct StieltjesResult {
    pub order: u32,
    pub a: Float,
    pub value: Float,
    pub method: Method,
    /// Estimated absolute error from truncation, quadrature or fitting.
    pub tail_estimate: Float,
    pub terms_used: usize,
}

pub(crate) fn check_a(a: &Float) -> Result<()> {
    if !a.is_finite() || *a <= 0 {
        return Err(Error::Domain(format!("Stieltjes constants need a > 0, got {}", a.to_f64())));
    }
    Ok(())
}

pub(crate) fn psi(x: &Float, p: u32) -> Result<Float> {
    Ok(digamma_p(&MPComplex::from_real(Float::with_val(p, x)), p)?.re)
}

pub(crate) fn psi_n(n: u32, x: &Float, p: u32) -> Result<Float> {
    Ok(polygamma_p(n, &MPComplex::from_real(Float::with_val(p, x)), p)?.re)
}

/// `Σ_{j<n} ln^order(a+j)/(a+j)` and `a + n`.
pub(crate) fn shift_terms(a: &Float, n: usize, order: u32, p: u32) -> (Float, Float) {
    let mut sum = Float::new(p);
    for j in 0..n {
        let x = Float::with_val(p, a + j as u32);
        let l = Float::with_val(p, x.ln_ref());
        let mut t = Float::with_val(p, 1);
        for _ in 0..order {
            t *= &l;
        }
        sum += t / x;
    }
    (sum, Float::with_val(p, a + n as u32))
}

/// Unit steps bringing `a` up to `target`.
pub(crate) fn steps_to(a: &Float, target: f64) -> usize {
    let r = a.to_f64();
    if r >= target {
        0
    } else {
        (target - r).ceil() as usize
    }
}
