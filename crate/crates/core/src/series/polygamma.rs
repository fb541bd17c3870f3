use rug::{Float, Rational};

use super::{check_re_positive, guarded, shift_steps, Accumulator, Decay, Pass, SeriesEvaluation};
use crate::error::{Error, Result};
use crate::exact;
use crate::precision::{gamma_p, rgamma_p, MPComplex, PrecisionContext};

/// `(−1)^k B_k^(n+k) (n+k−1)!/((n+k) k!)`.
fn polygamma_coeff(n: usize, k: usize) -> Rational {
    let b = exact::norlund_poly(k).eval(&Rational::from(n + k));
    let v = b * exact::factorial(n + k - 1) / (exact::factorial(k) * (n + k) as u64);
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `ψ^(n)(x)` for `n ≥ 1` from
/// `(−1)^(n+1) n Γ(x) Σ_k (−1)^k/k! · B_k^(n+k)/(n+k) · (n+k−1)!/Γ(n+k+x)`.
pub fn polygamma_series(n: u32, x: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    if n == 0 {
        return Err(Error::InvalidArgument("polygamma_series needs order n ≥ 1".into()));
    }
    check_re_positive(x, "ψ^(n)(x)")?;
    let nu = n as usize;
    guarded(ctx, |p| {
        let xp = x.with_prec(p);
        let shift = shift_steps(x, p);
        // ψ^(n)(x) = ψ^(n)(x+N) + (−1)^(n+1) n! Σ_{j<N} (x+j)^(−n−1)
        let fact = Float::with_val(p, &exact::factorial(nu));
        let mut direct = MPComplex::zero(p);
        for j in 0..shift {
            direct = &direct + &xp.add_i64(j as i64).recip().powi(n as i64 + 1);
        }
        direct = direct.mul_real(&fact);
        let x2 = xp.add_i64(shift as i64);
        // V_k = Γ(x)/Γ(n+k+x) = 1/(x)_{n+k}
        let mut v = &gamma_p(&x2, p)? * &rgamma_p(&x2.add_i64(n as i64), p);
        let decay = Decay::Algebraic(x2.re.to_f64() + 1.0);
        let mut acc = Accumulator::new(v.mul_real(&Float::with_val(p, &polygamma_coeff(nu, 0))), p, ctx, decay);
        let mut done = false;
        let mut k = 0usize;
        while !done && !acc.exhausted() {
            v = &v / &x2.add_i64((nu + k) as i64);
            k += 1;
            let t = v.mul_real(&Float::with_val(p, &polygamma_coeff(nu, k)));
            done = acc.push(&t, t.log2_abs());
        }
        let pass = Pass::from_acc(&acc, done);
        let series = acc.sum.mul_i64(n as i64);
        let scale = direct.log2_abs().max(series.log2_abs());
        let v = &direct + &series;
        Ok((if n % 2 == 0 { -v } else { v }, scale, pass))
    })
}

/// The first `count` terms of the `n = 1` series next to the terms
/// `k!/((k+1)(x+k)(x)_k)` of the classical trigamma series, unshifted.
pub fn trigamma_terms(x: &MPComplex, count: usize, ctx: &PrecisionContext) -> Result<Vec<(MPComplex, MPComplex)>> {
    check_re_positive(x, "ψ'(x)")?;
    let p = ctx.working_bits();
    let x = x.with_prec(p);
    let mut v = &gamma_p(&x, p)? * &rgamma_p(&x.add_i64(1), p);
    // (x)_k built alongside
    let mut poch = MPComplex::one(p);
    let mut fact = Float::with_val(p, 1);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        if k > 0 {
            v = &v / &x.add_i64(k as i64);
            poch = &poch * &x.add_i64(k as i64 - 1);
            fact *= k as u32;
        }
        let nb = v.mul_real(&Float::with_val(p, &polygamma_coeff(1, k)));
        let classical = (&x.add_i64(k as i64) * &poch).mul_i64(k as i64 + 1).recip().mul_real(&fact);
        out.push((nb, classical));
    }
    Ok(out)
}

/// `ψ(a) − ln a` from `Σ_{n≥1} (−1)^n/n · [B_n^(n) + n B_{n−1}^(n−1)]/(a)_n`,
/// whose coefficients reduce to `−p_{n+1} (n−1)!`.
pub fn digamma_series(a: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    check_re_positive(a, "ψ(a) − ln a")?;
    guarded(ctx, |p| {
        let ap = a.with_prec(p);
        let shift = shift_steps(a, p);
        let a2 = ap.add_i64(shift as i64);
        // ψ(a) − ln a = [ψ(a') − ln a'] − Σ_{j<N} 1/(a+j) + ln(a'/a)
        let mut direct = &a2.ln() - &ap.ln();
        let mut scale = direct.log2_abs();
        for j in 0..shift {
            let r = ap.add_i64(j as i64).recip();
            scale = scale.max(r.log2_abs());
            direct = &direct - &r;
        }
        let decay = Decay::Algebraic(a2.re.to_f64() + 1.0);
        let mut acc = Accumulator::new(MPComplex::zero(p), p, ctx, decay);
        // W_n = (n−1)!/(a)_n
        let mut w = a2.recip();
        let mut done = false;
        let mut n = 0usize;
        while !done && !acc.exhausted() {
            n += 1;
            if n > 1 {
                w = &w.mul_i64(n as i64 - 1) / &a2.add_i64(n as i64 - 1);
            }
            let pc = Float::with_val(p, &exact::p_constant(n + 1)?);
            let t = -w.mul_real(&pc);
            done = acc.push(&t, t.log2_abs());
        }
        let pass = Pass::from_acc(&acc, done);
        Ok((&direct + &acc.sum, scale.max(acc.scale), pass))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{digamma_p, euler_gamma, ln2, pi, polygamma_p, riemann_zeta_oracle};

    fn c(x: f64) -> MPComplex {
        MPComplex::from_f64(192, x, 0.0)
    }

    fn rel(a: &MPComplex, b: &MPComplex) -> f64 {
        (a - b).log2_abs() - b.log2_abs()
    }

    #[test]
    fn trigamma_and_tetragamma_values() {
        let ctx = PrecisionContext::default();
        let v = polygamma_series(1, &c(1.0), &ctx).unwrap();
        assert!(rel(&v.value, &MPComplex::from_real(pi(192).square() / 6u32)) < -120.0);
        let v = polygamma_series(2, &c(1.0), &ctx).unwrap();
        let z3 = riemann_zeta_oracle(&c(3.0), &ctx).unwrap();
        assert!(rel(&v.value, &z3.mul_i64(-2)) < -120.0);
        for (n, x) in [(1u32, 0.3), (3, 2.5), (4, 7.0)] {
            let v = polygamma_series(n, &c(x), &ctx).unwrap();
            let want = polygamma_p(n, &c(x), 192).unwrap();
            assert!(rel(&v.value, &want) < -120.0, "n={n} x={x}");
        }
        let z = MPComplex::from_f64(192, 0.5, 3.0);
        let v = polygamma_series(1, &z, &ctx).unwrap();
        assert!(rel(&v.value, &polygamma_p(1, &z, 192).unwrap()) < -120.0);
    }

    #[test]
    fn trigamma_functional_equation() {
        let ctx = PrecisionContext::default();
        let x = c(1.7);
        let a = polygamma_series(1, &x, &ctx).unwrap().value;
        let b = polygamma_series(1, &x.add_i64(1), &ctx).unwrap().value;
        let want = -x.sqr().recip();
        assert!(rel(&(&b - &a), &want) < -118.0);
    }

    #[test]
    fn trigamma_terms_agree() {
        let ctx = PrecisionContext::default();
        for (nb, classical) in trigamma_terms(&c(0.75), 40, &ctx).unwrap() {
            assert!(rel(&nb, &classical) < -180.0);
        }
    }

    #[test]
    fn digamma_values() {
        let ctx = PrecisionContext::default();
        let g = MPComplex::from_real(euler_gamma(192));
        let v = digamma_series(&c(1.0), &ctx).unwrap();
        assert!(rel(&v.value, &-g.clone()) < -120.0);
        let v = digamma_series(&c(2.0), &ctx).unwrap();
        let want = (&MPComplex::one(192) - &g).add_real(&-ln2(192));
        assert!(rel(&v.value, &want) < -120.0);
        for a in [c(10.0), c(0.05), MPComplex::from_f64(192, 2.0, -5.0)] {
            let v = digamma_series(&a, &ctx).unwrap();
            assert!(rel(&v.value, &(&digamma_p(&a, 192).unwrap() - &a.ln())) < -118.0);
        }
    }
}
