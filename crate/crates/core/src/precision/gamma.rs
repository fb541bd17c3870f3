//! Γ, ln Γ, 1/Γ, ψ and ψ⁽ᵐ⁾ for complex arguments.
//!
//! Each function shifts the argument right with the recurrence until
//! `Re w ≥ 0.12·p + 10 (+ m)`, then sums the Stirling-type asymptotic series
//! with Bernoulli-number coefficients until the terms drop below `2^-p`.
//! Results that suffer cancellation in the recurrence are recomputed with
//! the lost bits added back.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::float::Constant;
use rug::Float;

use super::complex::MPComplex;
use super::context::PrecisionContext;
use crate::error::{Error, Result};
use crate::exact;

/// `B_{2k}` for `k = 1..=count` rounded to `prec` bits.
fn bernoulli_table(prec: u32, count: usize) -> Arc<Vec<Float>> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<Vec<Float>>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.lock().unwrap().get(&prec) {
        if t.len() >= count {
            return t.clone();
        }
    }
    let count = count.max(16).next_power_of_two();
    let t: Arc<Vec<Float>> = Arc::new(
        (1..=count)
            .map(|k| Float::with_val(prec, &exact::bernoulli_number(2 * k)))
            .collect(),
    );
    tables.lock().unwrap().insert(prec, t.clone());
    t
}

fn shift_threshold(prec: u32, order: u32) -> f64 {
    (0.12 * prec as f64).ceil() + 10.0 + order as f64
}

/// Number of unit steps that bring `Re z` above the asymptotic threshold.
fn shift_count(z: &MPComplex, prec: u32, order: u32) -> usize {
    let re = z.re.to_f64();
    let r = shift_threshold(prec, order);
    if re >= r {
        0
    } else {
        (r - re).ceil() as usize
    }
}

fn log2_bits(n: usize) -> u32 {
    usize::BITS - n.leading_zeros()
}

fn check_pole(z: &MPComplex, what: &str) -> Result<()> {
    if z.is_nonpositive_integer() {
        return Err(Error::Pole(format!("{what} at nonpositive integer {}", z.to_decimal(10))));
    }
    Ok(())
}

/// Runs `f` at increasing precision until its own estimate of lost bits is
/// covered. `f(p)` returns the value and `log2` of the magnitude scale that
/// entered the cancellation.
pub(crate) fn with_cancellation_guard(
    target: u32,
    mut f: impl FnMut(u32) -> Result<(MPComplex, f64)>,
) -> Result<MPComplex> {
    let mut p = target + 8;
    let mut best = None;
    for _ in 0..4 {
        let (v, scale) = f(p)?;
        let lost = (scale - v.log2_abs()).max(0.0);
        if !lost.is_finite() || lost + (target as f64) + 4.0 <= p as f64 {
            return Ok(v.with_prec(target));
        }
        best = Some(v);
        let next = target + lost.ceil() as u32 + 12;
        if next > 3 * target + 64 {
            break;
        }
        p = next.max(p + 16);
    }
    Ok(best.expect("loop ran").with_prec(target))
}

fn ln_gamma_asymptotic(w: &MPComplex, p: u32) -> MPComplex {
    let half = Float::with_val(p, 0.5);
    let ln_2pi = Float::with_val(p, Float::with_val(p, Constant::Pi) * 2u32).ln();
    let lnw = w.ln();
    let mut s = &(&w.add_real(&-half.clone()) * &lnw) - w;
    s = s.add_real(&Float::with_val(p, &ln_2pi / 2u32));
    let winv = w.recip();
    let winv2 = winv.sqr();
    let mut pw = winv;
    let mut table = bernoulli_table(p, 64);
    let floor = s.log2_abs().max(0.0) - p as f64 - 4.0;
    for k in 1.. {
        if k > table.len() {
            table = bernoulli_table(p, 2 * k);
        }
        let c = Float::with_val(p, &table[k - 1] / ((2 * k * (2 * k - 1)) as u64));
        let t = pw.mul_real(&c);
        s = &s + &t;
        if t.log2_abs() < floor {
            break;
        }
        pw = &pw * &winv2;
    }
    s
}

/// `ψ(w) ≈ ln w − 1/(2w) − Σ B_{2k}/(2k w^{2k})`.
fn digamma_asymptotic(w: &MPComplex, p: u32) -> MPComplex {
    let winv = w.recip();
    let mut s = &w.ln() - &winv.div_i64(2);
    let winv2 = winv.sqr();
    let mut pw = winv2.clone();
    let mut table = bernoulli_table(p, 64);
    let floor = s.log2_abs().max(-(p as f64)) - p as f64 - 4.0;
    for k in 1.. {
        if k > table.len() {
            table = bernoulli_table(p, 2 * k);
        }
        let c = Float::with_val(p, &table[k - 1] / (2 * k) as u64);
        let t = pw.mul_real(&c);
        s = &s - &t;
        if t.log2_abs() < floor {
            break;
        }
        pw = &pw * &winv2;
    }
    s
}

/// `ψ^(m)(w)` for `m ≥ 1` from
/// `(−1)^(m+1)[(m−1)!/w^m + m!/(2w^(m+1)) + Σ B_{2k}(2k+m−1)!/((2k)! w^(2k+m))]`.
fn polygamma_asymptotic(m: u32, w: &MPComplex, p: u32) -> MPComplex {
    let winv = w.recip();
    let wm = winv.powi(m as i64);
    let fact = |n: u32| Float::with_val(p, &exact::factorial(n as usize));
    let mut s = &wm.mul_real(&fact(m - 1)) + &(&wm * &winv).mul_real(&(fact(m) / 2u32));
    let winv2 = winv.sqr();
    let mut pw = &wm * &winv2;
    let mut table = bernoulli_table(p, 64);
    let floor = s.log2_abs() - p as f64 - 4.0;
    // ratio (2k+m−1)!/(2k)! built incrementally
    let mut ratio = Float::with_val(p, 1);
    for j in 1..m {
        ratio *= 2 + j;
    }
    // ratio now (m+1)!/2! = (2+m−1)!/2!
    for k in 1.. {
        if k > table.len() {
            table = bernoulli_table(p, 2 * k);
        }
        let c = Float::with_val(p, &table[k - 1] * &ratio);
        let t = pw.mul_real(&c);
        s = &s + &t;
        if t.log2_abs() < floor {
            break;
        }
        pw = &pw * &winv2;
        // (2k+m+1)!/(2k+2)! = (2k+m−1)!/(2k)! · (2k+m)(2k+m+1)/((2k+1)(2k+2))
        let k2 = 2 * k as u64;
        ratio *= (k2 + m as u64) * (k2 + m as u64 + 1);
        ratio /= (k2 + 1) * (k2 + 2);
    }
    if m % 2 == 0 {
        -s
    } else {
        s
    }
}

pub(crate) fn log_gamma_p(z: &MPComplex, prec: u32) -> Result<MPComplex> {
    check_pole(z, "log-gamma")?;
    if z.is_real() && (z.re == 1 || z.re == 2) {
        return Ok(MPComplex::zero(prec));
    }
    with_cancellation_guard(prec, |p| {
        let n = shift_count(z, p, 0);
        let p = p + log2_bits(n) + 4;
        let z = z.with_prec(p);
        let w = z.add_i64(n as i64);
        let head = ln_gamma_asymptotic(&w, p);
        let mut scale = head.log2_abs();
        let mut acc = MPComplex::zero(p);
        for j in 0..n {
            let l = z.add_i64(j as i64).ln();
            scale = scale.max(l.log2_abs() + log2_bits(n) as f64);
            acc = &acc + &l;
        }
        Ok((&head - &acc, scale))
    })
}

pub(crate) fn gamma_p(z: &MPComplex, prec: u32) -> Result<MPComplex> {
    check_pole(z, "gamma")?;
    let n = shift_count(z, prec, 0);
    let w0 = z.add_i64(n as i64);
    let mag = (w0.abs().to_f64() * w0.abs().to_f64().ln().max(1.0)).log2().max(0.0);
    let p = prec + 16 + log2_bits(n) + mag.ceil() as u32;
    let z = z.with_prec(p);
    let w = z.add_i64(n as i64);
    let mut prod = MPComplex::one(p);
    for j in 0..n {
        prod = &prod * &z.add_i64(j as i64);
    }
    Ok((&ln_gamma_asymptotic(&w, p).exp() / &prod).with_prec(prec))
}

pub(crate) fn rgamma_p(z: &MPComplex, prec: u32) -> MPComplex {
    if z.is_nonpositive_integer() {
        return MPComplex::zero(prec);
    }
    let n = shift_count(z, prec, 0);
    let w0 = z.add_i64(n as i64);
    let mag = (w0.abs().to_f64() * w0.abs().to_f64().ln().max(1.0)).log2().max(0.0);
    let p = prec + 16 + log2_bits(n) + mag.ceil() as u32;
    let z = z.with_prec(p);
    let w = z.add_i64(n as i64);
    let mut prod = MPComplex::one(p);
    for j in 0..n {
        prod = &prod * &z.add_i64(j as i64);
    }
    (&prod * &(-ln_gamma_asymptotic(&w, p)).exp()).with_prec(prec)
}

pub(crate) fn digamma_p(z: &MPComplex, prec: u32) -> Result<MPComplex> {
    check_pole(z, "digamma")?;
    with_cancellation_guard(prec, |p| {
        let n = shift_count(z, p, 0);
        let p = p + log2_bits(n) + 4;
        let z = z.with_prec(p);
        let head = digamma_asymptotic(&z.add_i64(n as i64), p);
        let mut scale = head.log2_abs();
        let mut acc = MPComplex::zero(p);
        for j in 0..n {
            let r = z.add_i64(j as i64).recip();
            scale = scale.max(r.log2_abs() + log2_bits(n) as f64);
            acc = &acc + &r;
        }
        Ok((&head - &acc, scale))
    })
}

pub(crate) fn polygamma_p(m: u32, z: &MPComplex, prec: u32) -> Result<MPComplex> {
    if m == 0 {
        return digamma_p(z, prec);
    }
    check_pole(z, "polygamma")?;
    with_cancellation_guard(prec, |p| {
        let n = shift_count(z, p, m);
        let p = p + log2_bits(n) + 4;
        let z = z.with_prec(p);
        let head = polygamma_asymptotic(m, &z.add_i64(n as i64), p);
        let mut scale = head.log2_abs();
        let mut acc = MPComplex::zero(p);
        for j in 0..n {
            let r = z.add_i64(j as i64).recip().powi(m as i64 + 1);
            scale = scale.max(r.log2_abs() + log2_bits(n) as f64);
            acc = &acc + &r;
        }
        let fact = Float::with_val(p, &exact::factorial(m as usize));
        let acc = acc.mul_real(&fact);
        // ψ^(m)(z) = ψ^(m)(z+N) + (−1)^(m+1) m! Σ 1/(z+j)^(m+1)
        let v = if m % 2 == 1 { &head + &acc } else { &head - &acc };
        Ok((v, scale + fact.to_f64().log2()))
    })
}

/// `Γ(z)`.
pub fn gamma(z: &MPComplex, ctx: &PrecisionContext) -> Result<MPComplex> {
    gamma_p(z, ctx.working_bits())
}

/// `ln Γ(z)`, continued from the positive real axis along the recurrence
/// (the branch with cut on the negative real axis).
pub fn log_gamma(z: &MPComplex, ctx: &PrecisionContext) -> Result<MPComplex> {
    log_gamma_p(z, ctx.working_bits())
}

/// `1/Γ(z)`, entire; zero at the nonpositive integers.
pub fn rgamma(z: &MPComplex, ctx: &PrecisionContext) -> MPComplex {
    rgamma_p(z, ctx.working_bits())
}

/// `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma(z: &MPComplex, ctx: &PrecisionContext) -> Result<MPComplex> {
    digamma_p(z, ctx.working_bits())
}

/// `ψ^(m)(z)`; `m = 0` is the digamma function.
pub fn polygamma(m: u32, z: &MPComplex, ctx: &PrecisionContext) -> Result<MPComplex> {
    polygamma_p(m, z, ctx.working_bits())
}

/// Euler's constant `γ = −ψ(1)`.
pub fn euler_gamma(prec: u32) -> Float {
    Float::with_val(prec, Constant::Euler)
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn ln2(prec: u32) -> Float {
    Float::with_val(prec, Constant::Log2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(128).unwrap()
    }

    fn rel(a: &MPComplex, b: &MPComplex) -> f64 {
        (a - b).log2_abs() - b.log2_abs()
    }

    fn real(x: f64) -> MPComplex {
        MPComplex::from_f64(192, x, 0.0)
    }

    #[test]
    fn gamma_examples() {
        let c = ctx();
        assert!(rel(&gamma(&real(1.0), &c).unwrap(), &real(1.0)) < -128.0);
        assert!(rel(&gamma(&real(5.0), &c).unwrap(), &real(24.0)) < -128.0);
        let sqrt_pi = MPComplex::from_real(pi(192).sqrt());
        assert!(rel(&gamma(&real(0.5), &c).unwrap(), &sqrt_pi) < -128.0);
        assert!(matches!(gamma(&real(-3.0), &c), Err(Error::Pole(_))));
        assert!(rgamma(&real(-3.0), &c).is_zero());
    }

    #[test]
    fn gamma_matches_mpfr_on_reals() {
        let c = ctx();
        for x in [0.001, 0.3, 1.7, 7.25, 33.5, 150.0, -0.5, -4.75] {
            let want = MPComplex::from_real(Float::with_val(192, x).gamma());
            assert!(rel(&gamma(&real(x), &c).unwrap(), &want) < -130.0, "Γ({x})");
            let lg = Float::with_val(192, x).ln_abs_gamma().0;
            if x > 0.0 {
                let got = log_gamma(&real(x), &c).unwrap();
                assert!(Float::with_val(192, &got.re - &lg).abs().to_f64() < 1e-38 * lg.to_f64().abs().max(1.0), "lnΓ({x})");
            }
            let rg = rgamma(&real(x), &c);
            assert!(rel(&(&rg * &want), &real(1.0)) < -128.0);
        }
    }

    #[test]
    fn complex_gamma_reflection() {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let c = ctx();
        let z = MPComplex::from_f64(192, 0.3, 2.5);
        let one_minus = &MPComplex::one(192) - &z;
        let lhs = &gamma(&z, &c).unwrap() * &gamma(&one_minus, &c).unwrap();
        let piz = z.mul_real(&pi(192));
        let i = MPComplex::i(192);
        let sin = (&(&piz * &i).exp() - &(&-&piz * &i).exp()) / i.mul_i64(2);
        let rhs = MPComplex::from_real(pi(192)) / sin;
        assert!(rel(&lhs, &rhs) < -125.0);
        let lg = log_gamma(&z, &c).unwrap();
        assert!(rel(&lg.exp(), &gamma(&z, &c).unwrap()) < -125.0);
    }

    #[test]
    fn digamma_examples() {
        let c = ctx();
        let g = MPComplex::from_real(euler_gamma(192));
        assert!(rel(&digamma(&real(1.0), &c).unwrap(), &-&g) < -128.0);
        for n in [1usize, 5, 20] {
            let h = MPComplex::from_rational(192, &exact::harmonic(n));
            assert!(rel(&digamma(&real(n as f64 + 1.0), &c).unwrap(), &(&h - &g)) < -128.0);
        }
        // near the positive root relative accuracy must survive
        let x0 = Float::with_val(192, Float::parse("1.4616321449683623412626595423257213284681962040064463512959884085987864403538018102430749927337255927").unwrap());
        let v = digamma(&MPComplex::from_real(x0.clone()), &c).unwrap();
        assert!(v.log2_abs() < -150.0);
        assert!(matches!(digamma(&real(0.0), &c), Err(Error::Pole(_))));
    }

    #[test]
    fn digamma_functional_equation_random() {
        let c = ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x: f64 = rng.gen_range(1e-3..10.0);
            let z = real(x);
            let lhs = digamma(&z.add_i64(1), &c).unwrap();
            let rhs = &digamma(&z, &c).unwrap() + &z.recip();
            assert!(rel(&lhs, &rhs) < -127.0, "x={x}");
        }
    }

    #[test]
    fn polygamma_values() {
        let c = ctx();
        let pi2_6 = MPComplex::from_real(pi(192).square() / 6u32);
        assert!(rel(&polygamma(1, &real(1.0), &c).unwrap(), &pi2_6) < -128.0);
        let z3 = Float::with_val(192, 3).zeta();
        let want = MPComplex::from_real(z3 * -2i32);
        assert!(rel(&polygamma(2, &real(1.0), &c).unwrap(), &want) < -128.0);
        // ψ'(x+1) = ψ'(x) − 1/x²
        let z = MPComplex::from_f64(192, 0.75, -1.5);
        let lhs = polygamma(1, &z.add_i64(1), &c).unwrap();
        let rhs = &polygamma(1, &z, &c).unwrap() - &z.recip().sqr();
        assert!(rel(&lhs, &rhs) < -125.0);
        for m in 1..=4u32 {
            let lhs = polygamma(m, &z.add_i64(1), &c).unwrap();
            let f = MPComplex::from_rational(192, &exact::factorial(m as usize).into());
            let mut corr = &z.recip().powi(m as i64 + 1) * &f;
            if m % 2 == 1 {
                corr = -corr;
            }
            let rhs = &polygamma(m, &z, &c).unwrap() + &corr;
            assert!(rel(&lhs, &rhs) < -124.0, "m={m}");
        }
    }
}
