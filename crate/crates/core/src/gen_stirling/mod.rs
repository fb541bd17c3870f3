//! Stirling numbers of the first kind `s(λ,k)` with complex first argument,
//! defined through derivatives of the Pochhammer symbol at `s = 1`:
//! `s(λ,k) = (−1)^(λ+k)/(k−1)! · (d/ds)^(k−1) (s)_{λ−1} |_{s=1}`.
//! With `(s)_{λ−1} = Γ(s+λ−1)/Γ(s)` the derivatives are Bell polynomials in
//! `ψ^(j)(λ) − ψ^(j)(1)`. Also the Beta-function identities behind the
//! harmonic-number series.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::exact::{self, RationalPolynomial};
use crate::precision::{
    gamma_p, hurwitz_zeta_oracle, pi, polygamma_p, quadrature, MPComplex, PrecisionContext,
};
use crate::verify::IdentityResult;

/// Largest second argument supported by [`stirling1_complex`].
pub const MAX_K: u32 = 5;

/// A value `s(λ,k)`.
#[derive(Clone, Debug)]
pub struct ComplexStirling {
    pub lambda: MPComplex,
    pub k: u32,
    pub value: MPComplex,
}

impl ComplexStirling {
    pub fn new(lambda: &MPComplex, k: u32, ctx: &PrecisionContext) -> Result<Self> {
        Ok(Self { lambda: lambda.clone(), k, value: stirling1_complex(lambda, k, ctx)? })
    }
}

/// Complete Bell polynomial `Y_m(x_1, …, x_m)`, `m = x.len()`.
pub fn complete_bell(x: &[MPComplex], p: u32) -> MPComplex {
    let mut y = vec![MPComplex::one(p)];
    for n in 0..x.len() {
        let mut next = MPComplex::zero(p);
        let mut c = Integer::from(1);
        for i in 0..=n {
            let t = (&y[n - i] * &x[i]).mul_real(&Float::with_val(p, &c));
            next = &next + &t;
            c *= (n - i) as u64;
            c /= (i + 1) as u64;
        }
        y.push(next);
    }
    y.pop().expect("Y_0 is present")
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 || k > MAX_K {
        return Err(Error::Range(format!("complex Stirling numbers need 1 ≤ k ≤ {MAX_K}, got {k}")));
    }
    Ok(())
}

fn check_lambda(lambda: &MPComplex) -> Result<()> {
    if lambda.is_nonpositive_integer() {
        return Err(Error::Pole(format!("Γ(λ) at λ = {}", lambda.to_decimal(10))));
    }
    Ok(())
}

/// `e^(iπ(λ+k))`, the continuation of `(−1)^(λ+k)`.
fn phase(lambda: &MPComplex, k: u32, p: u32) -> MPComplex {
    let turn = MPComplex::exp_i_pi(&Float::with_val(p, &lambda.re + k));
    let damp = Float::with_val(p, -Float::with_val(p, &lambda.im * pi(p))).exp();
    turn.mul_real(&damp)
}

/// `(−1)^(λ+k) Γ(λ)/(k−1)!` at precision `p`.
fn prefactor(lambda: &MPComplex, k: u32, p: u32) -> Result<MPComplex> {
    let g = gamma_p(lambda, p)?;
    let f = Float::with_val(p, &exact::factorial(k as usize - 1));
    Ok((&phase(lambda, k, p) * &g).div_real(&f))
}

/// `s(λ,k)` for `1 ≤ k ≤ 5`, `λ` not a nonpositive integer.
///
/// For a positive integer `λ < k` the value is exactly zero.
pub fn stirling1_complex(lambda: &MPComplex, k: u32, ctx: &PrecisionContext) -> Result<MPComplex> {
    check_k(k)?;
    check_lambda(lambda)?;
    let wp = ctx.working_bits();
    if let Some(n) = lambda.as_integer() {
        if n >= 1 && (k as i64) > n {
            return Ok(MPComplex::zero(wp));
        }
    }
    let p = wp + 32;
    let l = lambda.with_prec(p);
    let one = MPComplex::one(p);
    let mut g = Vec::with_capacity(k as usize - 1);
    for j in 0..k - 1 {
        g.push(&polygamma_p(j, &l, p)? - &polygamma_p(j, &one, p)?);
    }
    let y = complete_bell(&g, p);
    Ok((&prefactor(&l, k, p)? * &y).with_prec(wp))
}

/// `H_{λ−1}^(r) = (−1)^(r−1)/(r−1)! · [ψ^(r−1)(λ) − ψ^(r−1)(1)]`.
pub fn harmonic_complex(lambda: &MPComplex, r: u32, p: u32) -> Result<MPComplex> {
    if r == 0 {
        return Err(Error::Range("generalized harmonic numbers need r ≥ 1".into()));
    }
    let d = &polygamma_p(r - 1, lambda, p)? - &polygamma_p(r - 1, &MPComplex::one(p), p)?;
    let f = Float::with_val(p, &exact::factorial(r as usize - 1));
    let v = d.div_real(&f);
    Ok(if r % 2 == 1 { v } else { -v })
}

/// The closed forms in harmonic numbers, `H = H_{λ−1}`:
/// `s(λ,2) = (−1)^λ Γ(λ) H`,
/// `s(λ,3) = (−1)^(λ+1) Γ(λ)/2 · [H² − H^(2)]` and
/// `s(λ,4) = (−1)^λ Γ(λ)/6 · [H³ − 3HH^(2) + 2H^(3)]`.
pub fn stirling1_closed_form(lambda: &MPComplex, k: u32, ctx: &PrecisionContext) -> Result<MPComplex> {
    check_lambda(lambda)?;
    if !(2..=4).contains(&k) {
        return Err(Error::Range(format!("closed forms cover k = 2, 3, 4, got {k}")));
    }
    let wp = ctx.working_bits();
    let p = wp + 32;
    let l = lambda.with_prec(p);
    let h1 = harmonic_complex(&l, 1, p)?;
    let bracket = match k {
        2 => h1,
        3 => &h1.sqr() - &harmonic_complex(&l, 2, p)?,
        _ => {
            let h2 = harmonic_complex(&l, 2, p)?;
            let h3 = harmonic_complex(&l, 3, p)?;
            let cube = &h1.sqr() * &h1;
            &(&cube - &(&h1 * &h2).mul_i64(3)) + &h3.mul_i64(2)
        }
    };
    Ok((&prefactor(&l, k, p)? * &bracket).with_prec(wp))
}

/// `|s(λ,k) − s(λ−1,k−1) + (λ−1)s(λ−1,k)|` for `2 ≤ k ≤ 5`.
pub fn stirling1_recursion_check(lambda: &MPComplex, k: u32, ctx: &PrecisionContext) -> Result<Float> {
    if k < 2 {
        return Err(Error::Range(format!("the recursion needs k ≥ 2, got {k}")));
    }
    let lm1 = lambda.add_i64(-1);
    let a = stirling1_complex(lambda, k, ctx)?;
    let b = stirling1_complex(&lm1, k - 1, ctx)?;
    let c = stirling1_complex(&lm1, k, ctx)?;
    Ok((&(&a - &b) + &(&lm1 * &c)).abs())
}

/// `(d/ds)^ℓ (s)_j` at `s = 1`, from the exact polynomial `(s)_j`.
pub fn rising_derivative_at_one(j: usize, l: usize) -> Rational {
    let mut poly = RationalPolynomial::rising(&Rational::new(), j);
    for _ in 0..l {
        poly = poly.derivative();
    }
    poly.eval(&Rational::from(1))
}

/// Tail estimate `t_K K/(s−1) · (1 + λ/((s−1) ln K))` for a positive series whose
/// terms decay like `ln^λ k · k^−s`, `λ ∈ {0, 1}`.
fn algebraic_tail(last: &Float, k: usize, s: f64, logs: bool) -> f64 {
    let kf = k as f64;
    let base = last.to_f64() * kf / (s - 1.0);
    if logs {
        base * (1.0 + 1.0 / ((s - 1.0) * kf.ln()))
    } else {
        base
    }
}

/// Residuals of the Beta-function identities at `x > 0` and `n ≥ 0`:
///
/// * `B(x,n+1) = n!/(x)_{n+1}`, against quadrature and against the partial
///   fractions `Σ_ℓ (−1)^ℓ C(n,ℓ)/(x+ℓ)`;
/// * `Σ_{k≥0} k!/((k+1)(x)_{k+1}) = ψ'(x) = ζ(2,x)`;
/// * `Σ_{k≥1} k! H_k/(x)_{k+2} = 1/x³`;
/// * `∂_x B(x,n+1) = n!/(x)_{n+1} [ψ(x) − ψ(x+n+1)] = −Σ_ℓ (−1)^ℓ C(n,ℓ)/(x+ℓ)²`,
///   also against quadrature of `t^(x−1)(1−t)^n ln t`.
///
/// The two infinite series converge like `k^−(x+1)`; they are cut at
/// `min(max_terms, 10⁴)` terms and pass when the residual stays within twice
/// the estimated tail.
pub fn appendix_a_suite(x: &Float, n: usize, ctx: &PrecisionContext) -> Result<Vec<IdentityResult>> {
    if !x.is_finite() || *x <= 0 {
        return Err(Error::Domain(format!("the Beta identities need x > 0, got {}", x.to_f64())));
    }
    const SUITE: &str = "appendixA";
    let wp = ctx.working_bits();
    let tight = (-(ctx.target_bits() as f64) + 8.0).exp2();
    let loose = (-(ctx.target_bits() as f64) / 2.0).exp2();
    let xw = Float::with_val(wp, x);
    let rel = |a: &Float, b: &Float| {
        let d = Float::with_val(wp, a - b).abs();
        let m = Float::with_val(wp, a.abs_ref()).max(&Float::with_val(wp, b.abs_ref()));
        if m.is_zero() {
            0.0
        } else {
            (d / m).to_f64()
        }
    };
    let mut out = Vec::new();

    // n!/(x)_{n+1} and ψ(x) − ψ(x+n+1)
    let mut poch = Float::with_val(wp, 1);
    for j in 0..=n {
        poch *= Float::with_val(wp, &xw + j as u32);
    }
    let beta = Float::with_val(wp, &exact::factorial(n)) / &poch;
    let q = wp + n as u32 + 16;
    let xq = Float::with_val(q, x);
    let mut partial = Float::new(q);
    let mut partial_sq = Float::new(q);
    for l in 0..=n {
        let c = Float::with_val(q, &exact::binomial(n, l));
        let d = Float::with_val(q, &xq + l as u32);
        let t = c / &d;
        let t2 = Float::with_val(q, &t / &d);
        if l % 2 == 0 {
            partial += t;
            partial_sq += t2;
        } else {
            partial -= t;
            partial_sq -= t2;
        }
    }
    let partial = Float::with_val(wp, partial);
    let partial_sq = Float::with_val(wp, -partial_sq);
    out.push(IdentityResult::new(SUITE, format!("beta_partial_fractions(n={n})"), rel(&beta, &partial), tight));

    let xm1 = Float::with_val(wp, &xw - 1u32);
    let integrand = |t: &Float, u: &Float, with_log: bool| -> Result<Float> {
        let lt = Float::with_val(wp, t.ln_ref());
        let mut v = Float::with_val(wp, &xm1 * &lt).exp();
        v *= Float::with_val(wp, u.pow(n as u32));
        if with_log {
            v *= lt;
        }
        Ok(v)
    };
    let quad = quadrature(|t, u| integrand(t, u, false), ctx)?;
    out.push(IdentityResult::new(SUITE, format!("beta_integral(n={n})"), rel(&beta, &quad), loose));

    let psi_x = polygamma_p(0, &MPComplex::from_real(xw.clone()), wp)?.re;
    let psi_xn = polygamma_p(0, &MPComplex::from_real(Float::with_val(wp, &xw + (n as u32 + 1))), wp)?.re;
    let dbeta = Float::with_val(wp, &beta * Float::with_val(wp, &psi_x - &psi_xn));
    out.push(IdentityResult::new(SUITE, format!("beta_derivative_partial_fractions(n={n})"), rel(&dbeta, &partial_sq), tight));
    let dquad = quadrature(|t, u| integrand(t, u, true), ctx)?;
    out.push(IdentityResult::new(SUITE, format!("beta_derivative_integral(n={n})"), rel(&dbeta, &dquad), loose));

    // the two infinite series, r_k = k!/(x)_{k+1}
    let cut = ctx.max_terms().min(10_000);
    let trigamma = hurwitz_zeta_oracle(&MPComplex::from_i64(wp, 2), &xw, ctx)?.re;
    let target = Float::with_val(wp, xw.clone().square() * &xw).recip();
    let mut r = Float::with_val(wp, xw.recip_ref());
    let mut h = Float::new(wp);
    let mut s1 = Float::with_val(wp, &r);
    let mut s2 = Float::new(wp);
    let (mut last1, mut last2) = (r.clone(), Float::new(wp));
    for k in 1..cut {
        r *= k as u32;
        r /= Float::with_val(wp, &xw + k as u32);
        h += Float::with_val(wp, k as u32).recip();
        last1 = Float::with_val(wp, &r / (k as u32 + 1));
        s1 += &last1;
        // k! H_k/(x)_{k+2} = r_k H_k/(x+k+1)
        last2 = Float::with_val(wp, &r * &h) / Float::with_val(wp, &xw + (k as u32 + 1));
        s2 += &last2;
    }
    let xf = xw.to_f64();
    let tail1 = algebraic_tail(&last1, cut, xf + 1.0, false);
    let tail2 = algebraic_tail(&last2, cut, xf + 1.0, true);
    let res1 = Float::with_val(wp, &trigamma - &s1).to_f64();
    let res2 = Float::with_val(wp, &target - &s2).to_f64();
    out.push(IdentityResult::new(SUITE, format!("trigamma_series(K={cut})"), res1.abs(), 2.0 * tail1 + tight).with_note(format!("tail estimate {tail1:.3e}")));
    out.push(IdentityResult::new(SUITE, format!("harmonic_inverse_cube(K={cut})"), res2.abs(), 2.0 * tail2 + tight).with_note(format!("tail estimate {tail2:.3e}")));
    Ok(out)
}
