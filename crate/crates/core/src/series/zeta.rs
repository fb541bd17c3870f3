use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rug::Float;

use super::{check_re_positive, guarded, shift_steps, Accumulator, Decay, Pass, SeriesEvaluation};
use crate::error::{Error, Result};
use crate::exact;
use crate::precision::{
    digamma_p, gamma_p, hurwitz_zeta_oracle, rgamma_p, MPComplex, PrecisionContext,
};

/// `q_k(s) = B_k^(s+k−1)/(s+k−1)` as floating coefficients in `s`.
struct CoeffFloats {
    vals: Vec<Float>,
    abs: Vec<Float>,
}

fn coeff_floats(k: usize, p: u32) -> Arc<CoeffFloats> {
    type Table = RwLock<HashMap<(usize, u32), Arc<CoeffFloats>>>;
    static CACHE: OnceLock<Table> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let pb = p.div_ceil(64) * 64;
    if let Some(c) = cache.read().unwrap().get(&(k, pb)) {
        return c.clone();
    }
    let poly = exact::zeta_coefficient(k);
    let vals = poly.coeffs().iter().map(|c| Float::with_val(pb, c)).collect();
    let abs = poly.coeffs().iter().map(|c| Float::with_val(32, c).abs()).collect();
    let c = Arc::new(CoeffFloats { vals, abs });
    cache.write().unwrap().insert((k, pb), c.clone());
    c
}

/// `q_k(s)` and `log2` of `Σ|c_j||s|^j`, the magnitude its rounding sees.
pub(crate) fn zeta_coeff_at(k: usize, s: &MPComplex, s_abs: &Float, p: u32) -> (MPComplex, f64) {
    let c = coeff_floats(k, p);
    let mut v = MPComplex::zero(p);
    let mut m = Float::new(32);
    for (cv, ca) in c.vals.iter().zip(&c.abs).rev() {
        v = (&v * s).add_real(cv);
        m = m * s_abs + ca;
    }
    (v.with_prec(p), log2_float(&m))
}

pub(crate) fn log2_float(x: &Float) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    Float::with_val(53, x.abs_ref()).log2().to_f64()
}

fn is_one(s: &MPComplex) -> bool {
    s.is_real() && s.re == 1
}

/// `m ≥ 1` with `s = 1 − m`, where the Pochhammer factor `(s−1)_k` ends the
/// series after `k = m`.
fn terminating(s: &MPComplex) -> Option<usize> {
    match s.as_integer() {
        Some(n) if n <= 0 => Some((1 - n) as usize),
        _ => None,
    }
}

fn pole_at_one(what: &str) -> Error {
    Error::Pole(format!("{what} has a pole at s = 1"))
}

/// The finite series at `s = 1 − m`, summed without any shift.
fn terminating_sum(s: &MPComplex, a: &MPComplex, m: usize, p: u32) -> Result<(MPComplex, f64)> {
    let s = s.with_prec(p);
    let a = a.with_prec(p);
    let w = &(&s + &a).add_i64(-1);
    let ga = gamma_p(&a, p)?;
    let sm1 = s.add_i64(-1);
    let s_abs = s.abs();
    let mut sum = &(&ga * &rgamma_p(w, p)) / &sm1;
    let mut scale = sum.log2_abs();
    let mut poch = ga.clone();
    for k in 1..=m {
        poch = &poch * &s.add_i64(k as i64 - 2).div_i64(k as i64);
        let pk = &poch * &rgamma_p(&w.add_i64(k as i64), p);
        let (q, qs) = zeta_coeff_at(k, &s, &s_abs, p);
        let t = &q * &pk;
        scale = scale.max(qs + pk.log2_abs());
        sum = if k % 2 == 1 { &sum - &t } else { &sum + &t };
    }
    let scale = scale.max(sum.log2_abs());
    Ok((sum, scale))
}

/// `ζ(s,a) − 1/(s−1)` from the Nörlund series with `a` already shifted, and
/// optionally the same series weighted by `ψ(s+k+a−1)`.
struct RegularParts {
    f: MPComplex,
    psi_weighted: Option<MPComplex>,
    scale: f64,
    pass: Pass,
}

fn regular_series(s: &MPComplex, a: &MPComplex, p: u32, ctx: &PrecisionContext, with_psi: bool) -> Result<RegularParts> {
    let s = s.with_prec(p);
    let a = a.with_prec(p);
    let sm1 = s.add_i64(-1);
    let near = if sm1.is_zero() { 0 } else { (-sm1.log2_abs()).max(0.0).ceil() as u32 };
    let pe = p + near + 8;
    let w = (&s.with_prec(pe) + &a.with_prec(pe)).add_i64(-1);
    let g0 = &gamma_p(&a.with_prec(pe), pe)? * &rgamma_p(&w, pe);
    let e = if sm1.is_zero() {
        -digamma_p(&a, p)?
    } else {
        (&g0.add_i64(-1) / &sm1.with_prec(pe)).with_prec(p)
    };
    let w = w.with_prec(p);
    let mut pk = g0.with_prec(p);
    let mut psi = if with_psi { Some(digamma_p(&w, p)?) } else { None };
    let mut weighted = psi.as_ref().map(|ps| &(&pk * ps) / &sm1);
    let s_abs = s.abs();
    let decay = Decay::Algebraic(a.re.to_f64() + 1.0);
    let mut acc = Accumulator::new(e, p, ctx, decay);
    let mut done = false;
    let mut k = 0usize;
    while !done && !acc.exhausted() {
        k += 1;
        pk = &(&pk * &s.add_i64(k as i64 - 2)) / &w.add_i64(k as i64 - 1).mul_i64(k as i64);
        let (q, qs) = zeta_coeff_at(k, &s, &s_abs, p);
        let mut t = &q * &pk;
        if k % 2 == 1 {
            t = -t;
        }
        if let (Some(ps), Some(wt)) = (psi.as_mut(), weighted.as_mut()) {
            *ps = &*ps + &w.add_i64(k as i64 - 1).recip();
            *wt = &*wt + &(&t * ps);
        }
        done = acc.push(&t, qs + pk.log2_abs());
    }
    let pass = Pass::from_acc(&acc, done);
    Ok(RegularParts { f: acc.sum, psi_weighted: weighted, scale: acc.scale, pass })
}

/// `Σ_{n<N} (a+n)^(−s)` with `a' = a + N` and the largest term magnitude.
fn shift_sum(s: &MPComplex, a: &MPComplex, n: usize, p: u32) -> (MPComplex, MPComplex, f64) {
    let neg_s = -&s.with_prec(p);
    let a = a.with_prec(p);
    let mut sum = MPComplex::zero(p);
    let mut scale = f64::NEG_INFINITY;
    for j in 0..n {
        let t = a.add_i64(j as i64).pow(&neg_s);
        scale = scale.max(t.log2_abs());
        sum = &sum + &t;
    }
    (sum, a.add_i64(n as i64), scale)
}

fn regular_shifted(s: &MPComplex, a: &MPComplex, p: u32, ctx: &PrecisionContext) -> Result<(MPComplex, f64, Pass)> {
    let (direct, a2, scale) = shift_sum(s, a, shift_steps(a, p), p);
    let r = regular_series(s, &a2, p, ctx, false)?;
    Ok((&direct + &r.f, scale.max(r.scale), r.pass))
}

/// `ζ(s,a)` for `s ≠ 1`, `Re a > 0`, from the Nörlund series
/// `ζ(s,a) = Γ(a)/[(s−1)Γ(s+a−1)] + Σ_{k≥1} (−1)^k q_k(s) Γ(a)(s−1)_k/(k! Γ(s+k+a−1))`.
pub fn hurwitz_zeta(s: &MPComplex, a: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    if is_one(s) {
        return Err(pole_at_one("ζ(s,a)"));
    }
    check_re_positive(a, "ζ(s,a)")?;
    if let Some(m) = terminating(s) {
        return guarded(ctx, |p| {
            let (v, scale) = terminating_sum(s, a, m, p)?;
            Ok((v, scale, Pass::exact(m + 1)))
        });
    }
    guarded(ctx, |p| {
        let (f, scale, pass) = regular_shifted(s, a, p, ctx)?;
        let pole = s.with_prec(p).add_i64(-1).recip();
        Ok((&f + &pole, scale.max(pole.log2_abs()), pass))
    })
}

/// `ζ(s,a) − 1/(s−1)`, which stays finite at `s = 1` where it equals `−ψ(a)`.
pub fn hurwitz_zeta_regular(s: &MPComplex, a: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    check_re_positive(a, "ζ(s,a)")?;
    guarded(ctx, |p| regular_at(s, a, p, ctx))
}

/// `ζ(s,a) − 1/(s−1)` at working precision `p`, for combining several of
/// them inside one guarded evaluation.
pub(crate) fn regular_at(s: &MPComplex, a: &MPComplex, p: u32, ctx: &PrecisionContext) -> Result<(MPComplex, f64, Pass)> {
    if let Some(m) = terminating(s) {
        let (v, scale) = terminating_sum(s, a, m, p)?;
        let pole = s.with_prec(p).add_i64(-1).recip();
        return Ok((&v - &pole, scale.max(pole.log2_abs()), Pass::exact(m + 1)));
    }
    regular_shifted(s, a, p, ctx)
}

/// `ζ(s)`; the `a = 1` case, including the trivial zeros from the finite
/// series at negative even integers.
pub fn riemann_zeta(s: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    hurwitz_zeta(s, &MPComplex::one(ctx.working_bits()), ctx)
}

fn check_negative_integer(s: &MPComplex, what: &str) -> Result<()> {
    if matches!(s.as_integer(), Some(n) if n < 0) {
        return Err(Error::Pole(format!("{what} has a pole at s = {}", s.to_decimal(6))));
    }
    Ok(())
}

/// `Γ(s)[s ζ(s+1,a) − a^(−s)]` from
/// `Γ(a) Σ_{k≥1} (−1)^(k−1)/k! [(s−1)q_k(s) − s q_k(s+1)] Γ(s+k)/Γ(s+k+a)`.
///
/// Finite at `s = 0`; poles at negative integers.
pub fn hurwitz_zeta_alt(s: &MPComplex, a: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    check_re_positive(a, "Γ(s)[sζ(s+1,a) − a^(−s)]")?;
    check_negative_integer(s, "Γ(s)[sζ(s+1,a) − a^(−s)]")?;
    guarded(ctx, |p| {
        let sp = s.with_prec(p);
        let s1 = sp.add_i64(1);
        let n = shift_steps(a, p);
        let (direct, a2, dscale) = shift_sum(&s1, a, n, p);
        let g1 = gamma_p(&s1, p)?;
        // Γ(s)(a'^(−s) − a^(−s)) = Γ(s+1) a^(−s) expm1(−s ln(a'/a))/s
        let ap = a.with_prec(p);
        let l = &a2.ln() - &ap.ln();
        let ratio = if sp.is_zero() { -l } else { &(-&(&sp * &l)).exp_m1() / &sp };
        let jump = &(&g1 * &ap.pow(&-&sp)) * &ratio;
        let head = &(&g1 * &direct) + &jump;
        let mut scale = dscale + g1.log2_abs();
        scale = scale.max(jump.log2_abs());

        let s_abs = sp.abs();
        let s1_abs = s1.abs();
        let sm1 = sp.add_i64(-1);
        let mut rk = &(&gamma_p(&a2, p)? * &g1) * &rgamma_p(&(&s1 + &a2), p);
        let decay = Decay::Algebraic(a2.re.to_f64() + 1.0);
        let mut acc = Accumulator::new(MPComplex::zero(p), p, ctx, decay);
        let mut done = false;
        let mut k = 0usize;
        while !done && !acc.exhausted() {
            k += 1;
            if k > 1 {
                let num = sp.add_i64(k as i64 - 1);
                let den = (&num + &a2).mul_i64(k as i64);
                rk = &(&rk * &num) / &den;
            }
            let (q0, qs0) = zeta_coeff_at(k, &sp, &s_abs, p);
            let (q1, qs1) = zeta_coeff_at(k, &s1, &s1_abs, p);
            let c = &(&sm1 * &q0) - &(&sp * &q1);
            let mut t = &c * &rk;
            if k % 2 == 0 {
                t = -t;
            }
            let ts = (qs0 + sm1.log2_abs()).max(qs1 + s_abs.to_f64().log2()) + rk.log2_abs();
            done = acc.push(&t, ts);
        }
        let pass = Pass::from_acc(&acc, done);
        let v = &head + &acc.sum;
        Ok((v, scale.max(acc.scale), pass))
    })
}

/// `a^(−s) Γ(s)` from `(s−1) Σ_k (−1)^k/k! q_k(s) Γ(a)Γ(s+k)/Γ(s+k+a)`.
pub fn power_gamma_series(s: &MPComplex, a: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    check_re_positive(a, "a^(−s)Γ(s)")?;
    if s.is_nonpositive_integer() {
        return Err(Error::Pole(format!("Γ(s) has a pole at s = {}", s.to_decimal(6))));
    }
    guarded(ctx, |p| {
        let sp = s.with_prec(p);
        let ap = a.with_prec(p);
        let a2 = ap.add_i64(shift_steps(a, p) as i64);
        let factor = (&sp * &(&a2.ln() - &ap.ln())).exp();
        let sm1 = sp.add_i64(-1);
        let s_abs = sp.abs();
        let mut rk = &(&gamma_p(&a2, p)? * &gamma_p(&sp, p)?) * &rgamma_p(&(&sp + &a2), p);
        let decay = Decay::Algebraic(a2.re.to_f64() + 1.0);
        let mut acc = Accumulator::new(rk.clone(), p, ctx, decay);
        let mut done = sm1.is_zero();
        let mut k = 0usize;
        while !done && !acc.exhausted() {
            k += 1;
            let num = sp.add_i64(k as i64 - 1);
            rk = &(&rk * &num) / &(&num + &a2).mul_i64(k as i64);
            let (q, qs) = zeta_coeff_at(k, &sp, &s_abs, p);
            let mut t = &(&sm1 * &q) * &rk;
            if k % 2 == 1 {
                t = -t;
            }
            done = acc.push(&t, qs + sm1.log2_abs() + rk.log2_abs());
        }
        let pass = if sm1.is_zero() { Pass::exact(1) } else { Pass::from_acc(&acc, done) };
        Ok((&acc.sum * &factor, acc.scale + factor.log2_abs(), pass))
    })
}

/// `∂_a ζ(s,a)` from the a-derivative of the Nörlund series,
/// `ψ(a)ζ(s,a) − Σ_k (−1)^k q_k(s) Γ(a)(s−1)_k ψ(s+k+a−1)/(k! Γ(s+k+a−1))`.
pub fn partial_a_rhs(s: &MPComplex, a: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    if is_one(s) {
        return Err(pole_at_one("ζ(s,a)"));
    }
    check_re_positive(a, "∂_a ζ(s,a)")?;
    guarded(ctx, |p| {
        let sp = s.with_prec(p);
        let s1 = sp.add_i64(1);
        let (direct, a2, dscale) = shift_sum(&s1, a, shift_steps(a, p), p);
        let head = -&(&sp * &direct);
        let r = regular_series(&sp, &a2, p, ctx, true)?;
        let zeta = &r.f + &sp.add_i64(-1).recip();
        let psi_a = digamma_p(&a2, p)?;
        let tail = &(&psi_a * &zeta) - r.psi_weighted.as_ref().expect("requested");
        let scale = (dscale + sp.log2_abs()).max(r.scale + psi_a.log2_abs().max(0.0) + 4.0);
        Ok((&head + &tail, scale, r.pass))
    })
}

/// `|∂_a ζ(s,a) + s ζ(s+1,a)|` with the left side from [`partial_a_rhs`] and
/// `ζ(s+1,a)` from the Euler–Maclaurin oracle (the series when `a` is
/// complex).
pub fn partial_a_identity_check(s: &MPComplex, a: &MPComplex, ctx: &PrecisionContext) -> Result<Float> {
    if s.is_zero() {
        return Err(Error::Pole("ζ(s+1,a) has a pole at s = 0".into()));
    }
    let lhs = partial_a_rhs(s, a, ctx)?;
    let s1 = s.add_i64(1);
    let z = if a.is_real() {
        hurwitz_zeta_oracle(&s1, &a.re, ctx)?
    } else {
        hurwitz_zeta(&s1, a, ctx)?.value
    };
    Ok((&lhs.value + &(s * &z)).abs())
}

/// Relative residual of `ζ(s,1/2) = (2^s − 1) ζ(s)`, both sides from the
/// Nörlund series.
pub fn half_argument_residual(s: &MPComplex, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.working_bits();
    let half = hurwitz_zeta(s, &MPComplex::from_f64(p, 0.5, 0.0), ctx)?;
    let z = riemann_zeta(s, ctx)?;
    let two_s = MPComplex::from_i64(p, 2).pow(&s.with_prec(p)).add_i64(-1);
    let rhs = &two_s * &z.value;
    let diff = (&half.value - &rhs).abs();
    let m = rhs.abs();
    Ok(if m.is_zero() { diff } else { diff / m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{pi, riemann_zeta_oracle};
    use rug::Rational;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn rel(a: &MPComplex, b: &MPComplex) -> f64 {
        (a - b).log2_abs() - b.log2_abs()
    }

    fn c(re: f64, im: f64) -> MPComplex {
        MPComplex::from_f64(192, re, im)
    }

    #[test]
    fn zeta_at_zero_and_negative_integers() {
        let ctx = ctx();
        for a in [Rational::from((1, 4)), Rational::from((1, 3)), Rational::from(1), Rational::from((7, 2))] {
            let ac = MPComplex::from_rational(192, &a);
            let z0 = hurwitz_zeta(&c(0.0, 0.0), &ac, &ctx).unwrap();
            let want = MPComplex::from_rational(192, &(Rational::from((1, 2)) - &a));
            assert!(rel(&z0.value, &want) < -120.0);
            for m in 1..=8usize {
                let z = hurwitz_zeta(&MPComplex::from_i64(192, 1 - m as i64), &ac, &ctx).unwrap();
                let want = -exact::bernoulli_poly(m, &a) / Rational::from(m);
                let want = MPComplex::from_rational(192, &want);
                if want.is_zero() {
                    assert!(z.value.log2_abs() < -120.0);
                } else {
                    assert!(rel(&z.value, &want) < -120.0, "m={m} a={a}");
                }
            }
        }
    }

    #[test]
    fn trivial_zeros() {
        for n in 1..=5 {
            let z = riemann_zeta(&MPComplex::from_i64(192, -2 * n), &ctx()).unwrap();
            assert!(z.value.log2_abs() < -120.0);
            assert!(z.converged);
        }
    }

    #[test]
    fn zeta_two_and_pole() {
        let z = riemann_zeta(&c(2.0, 0.0), &ctx()).unwrap();
        let want = MPComplex::from_real(pi(192).square() / 6u32);
        assert!(rel(&z.value, &want) < -124.0);
        assert!(matches!(riemann_zeta(&c(1.0, 0.0), &ctx()), Err(Error::Pole(_))));
        assert!(matches!(hurwitz_zeta(&c(2.0, 0.0), &c(-0.5, 0.0), &ctx()), Err(Error::Domain(_))));
    }

    #[test]
    fn matches_oracle_off_axis() {
        let ctx = ctx();
        for (s, a) in [(c(2.5, 0.0), 1.25), (c(-3.7, 4.0), 0.3), (c(0.5, 9.0), 4.9), (c(1.1, 0.0), 2.0), (c(-9.5, 0.0), 1.0)] {
            let z = hurwitz_zeta(&s, &c(a, 0.0), &ctx).unwrap();
            let o = hurwitz_zeta_oracle(&s, &Float::with_val(192, a), &ctx).unwrap();
            assert!(rel(&z.value, &o) < -120.0, "s={s} a={a}: {}", rel(&z.value, &o));
        }
    }

    #[test]
    fn first_zero_is_small() {
        let ctx = PrecisionContext::new(64).unwrap();
        let s = MPComplex::parse("0.5+14.134725141734693790457251983562470270784257115699i", 128).unwrap();
        assert!(riemann_zeta(&s, &ctx).unwrap().value.abs().to_f64() < 1e-8);
    }

    #[test]
    fn regular_part_at_one_is_minus_digamma() {
        let ctx = ctx();
        let f = hurwitz_zeta_regular(&c(1.0, 0.0), &c(0.75, 0.0), &ctx).unwrap();
        let want = -digamma_p(&c(0.75, 0.0), 192).unwrap();
        assert!(rel(&f.value, &want) < -120.0);
        // close to the pole the value still carries full relative accuracy
        let s = c(1.0 + 1e-9, 0.0);
        let z = hurwitz_zeta(&s, &c(1.0, 0.0), &ctx).unwrap();
        let o = riemann_zeta_oracle(&s, &ctx).unwrap();
        assert!(rel(&z.value, &o) < -120.0);
    }

    #[test]
    fn alternate_form() {
        let ctx = ctx();
        // s = 1, a = 1: ζ(2) − 1
        let v = hurwitz_zeta_alt(&c(1.0, 0.0), &c(1.0, 0.0), &ctx).unwrap();
        let want = MPComplex::from_real(pi(192).square() / 6u32 - 1u32);
        assert!(rel(&v.value, &want) < -120.0);
        // s = 1.5, a = 2 against oracle values
        let s = c(1.5, 0.0);
        let v = hurwitz_zeta_alt(&s, &c(2.0, 0.0), &ctx).unwrap();
        let z = hurwitz_zeta_oracle(&c(2.5, 0.0), &Float::with_val(192, 2), &ctx).unwrap();
        let g = gamma_p(&s, 192).unwrap();
        let want = &g * &(&(&s * &z) - &c(2.0, 0.0).pow(&-&s));
        assert!(rel(&v.value, &want) < -120.0);
        // s = 0: ln a − ψ(a)
        let v = hurwitz_zeta_alt(&c(0.0, 0.0), &c(3.0, 0.0), &ctx).unwrap();
        let want = &c(3.0, 0.0).ln() - &digamma_p(&c(3.0, 0.0), 192).unwrap();
        assert!(rel(&v.value, &want) < -120.0);
        assert!(matches!(hurwitz_zeta_alt(&c(1.0, 0.0), &c(0.0, 0.0), &ctx), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_zeta_alt(&c(-2.0, 0.0), &c(1.0, 0.0), &ctx), Err(Error::Pole(_))));
    }

    #[test]
    fn power_gamma() {
        let ctx = ctx();
        let v = power_gamma_series(&c(1.0, 0.0), &c(1.0, 0.0), &ctx).unwrap();
        assert!(rel(&v.value, &c(1.0, 0.0)) < -120.0);
        let v = power_gamma_series(&c(2.0, 0.0), &c(3.0, 0.0), &ctx).unwrap();
        assert!(rel(&v.value, &MPComplex::from_real(Float::with_val(192, 9).recip())) < -120.0);
        let s = c(1.5, 0.0);
        let a = c(2.5, 0.0);
        let v = power_gamma_series(&s, &a, &ctx).unwrap();
        let want = &a.pow(&-&s) * &gamma_p(&s, 192).unwrap();
        assert!(rel(&v.value, &want) < -120.0);
        let s = c(-0.5, 2.0);
        let v = power_gamma_series(&s, &a, &ctx).unwrap();
        let want = &a.pow(&-&s) * &gamma_p(&s, 192).unwrap();
        assert!(rel(&v.value, &want) < -120.0);
    }

    #[test]
    fn partial_a_identity() {
        let ctx = ctx();
        for (s, a) in [(2.0, 1.0), (1.5, 0.5), (3.0, 2.0), (-2.5, 0.7)] {
            let r = partial_a_identity_check(&c(s, 0.0), &c(a, 0.0), &ctx).unwrap();
            assert!(r.to_f64() < 2f64.powi(-120), "s={s} a={a}: {}", r.to_f64());
        }
        let r = partial_a_identity_check(&c(0.3, 2.0), &c(1.5, 0.5), &ctx).unwrap();
        assert!(r.to_f64() < 2f64.powi(-118));
    }

    #[test]
    fn half_argument() {
        let ctx = ctx();
        for s in [c(2.5, 1.0), c(-3.3, 0.0), c(0.25, -6.0)] {
            assert!(half_argument_residual(&s, &ctx).unwrap().to_f64() < 2f64.powi(-120));
        }
    }
}
