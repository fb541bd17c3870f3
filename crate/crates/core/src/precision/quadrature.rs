//! Tanh-sinh (double exponential) quadrature on `[0, 1]`.
//!
//! The substitution `x = (1 + tanh(π/2 · sinh t))/2` pushes nodes toward both
//! endpoints double-exponentially, so integrable endpoint singularities cost
//! nothing extra. The integrand receives both `x` and `1 − x`, each computed
//! without cancellation, so it can resolve behavior at either end.

use rug::float::Constant;
use rug::Float;

use super::context::PrecisionContext;
use crate::error::{Error, Result};

const MAX_LEVEL: u32 = 12;

struct Node {
    x: Float,
    one_minus_x: Float,
    weight: Float,
}

fn node(t: &Float, p: u32) -> Node {
    let half_pi = Float::with_val(p, Constant::Pi) / 2u32;
    let u = Float::with_val(p, t.sinh_ref()) * &half_pi;
    let e = Float::with_val(p, &u * 2u32).exp();
    let x = Float::with_val(p, &e / Float::with_val(p, &e + 1u32));
    let one_minus_x = Float::with_val(p, Float::with_val(p, &e + 1u32).recip_ref());
    let cu = Float::with_val(p, u.cosh_ref());
    let weight = Float::with_val(p, t.cosh_ref()) * half_pi / 2u32 / cu.square();
    Node { x, one_minus_x, weight }
}

/// `∫_0^1 f(x) dx` to an absolute error of `2^-(target/2)`.
///
/// `f(x, 1−x)` may be singular at the endpoints as long as the integral
/// converges. Fails with [`Error::Quadrature`] if successive levels still
/// disagree at the finest step `2^-12`.
pub fn quadrature<F>(mut f: F, ctx: &PrecisionContext) -> Result<Float>
where
    F: FnMut(&Float, &Float) -> Result<Float>,
{
    let p = ctx.working_bits();
    let tol = Float::with_val(p, Float::i_exp(1, -((ctx.target_bits() / 2) as i32) - 2));
    let cutoff = Float::with_val(p, Float::i_exp(1, -(p as i32) - 10));

    // largest t whose weight is still significant
    let mut t_max = 0.0f64;
    loop {
        let n = node(&Float::with_val(p, t_max + 0.125), p);
        if n.weight < cutoff || n.one_minus_x.is_zero() {
            break;
        }
        t_max += 0.125;
    }
    t_max += 0.125;

    // weighted contribution of the symmetric pair ±t
    fn pair<F>(f: &mut F, t: Float, p: u32, cutoff: &Float) -> Result<Float>
    where
        F: FnMut(&Float, &Float) -> Result<Float>,
    {
        let n = node(&t, p);
        if n.weight < *cutoff {
            return Ok(Float::new(p));
        }
        let mut sum = f(&n.x, &n.one_minus_x)?;
        let m = node(&Float::with_val(p, -&t), p);
        sum += f(&m.x, &m.one_minus_x)?;
        Ok(sum * n.weight)
    }

    // level 0: h = 1
    let mut h = Float::with_val(p, 1);
    let mut sum = {
        let c = node(&Float::new(p), p);
        f(&c.x, &c.one_minus_x)? * c.weight
    };
    let mut eval = |t: Float| pair(&mut f, t, p, &cutoff);
    let mut k = 1u64;
    while (k as f64) <= t_max {
        sum += eval(Float::with_val(p, k))?;
        k += 1;
    }
    let mut estimate = Float::with_val(p, &sum * &h);
    for level in 1..=MAX_LEVEL {
        h /= 2u32;
        let steps = (t_max * (1u64 << level) as f64).ceil() as u64;
        let mut odd = Float::new(p);
        let mut j = 1u64;
        while j <= steps {
            odd += eval(Float::with_val(p, &h * j))?;
            j += 2;
        }
        sum += odd;
        let next = Float::with_val(p, &sum * &h);
        let diff = Float::with_val(p, &next - &estimate).abs();
        estimate = next;
        if level >= 3 && diff <= tol {
            return Ok(estimate);
        }
    }
    Err(Error::Quadrature(format!(
        "no agreement to 2^-{} after {MAX_LEVEL} halvings",
        ctx.target_bits() / 2 + 2
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::complex::MPComplex;
    use crate::precision::gamma::digamma_p;

    #[test]
    fn polynomial_and_constant() {
        let c = PrecisionContext::new(64).unwrap();
        let one = quadrature(|x, _| Ok(Float::with_val(x.prec(), 1)), &c).unwrap();
        assert!((one - 1u32).abs().to_f64() < 1e-18);
        let half = quadrature(|x, _| Ok(x.clone()), &c).unwrap();
        assert!((half - 0.5f64).abs().to_f64() < 1e-18);
    }

    #[test]
    fn digamma_shifted_integrates_to_zero() {
        let c = PrecisionContext::new(64).unwrap();
        let v = quadrature(
            |x, _| {
                let z = MPComplex::from_real(Float::with_val(x.prec(), x + 1u32));
                Ok(digamma_p(&z, x.prec())?.re)
            },
            &c,
        )
        .unwrap();
        assert!(v.abs().to_f64() < 1e-18);
    }

    #[test]
    fn endpoint_singularities() {
        let c = PrecisionContext::new(96).unwrap();
        // ∫ −ln(x) = 1, ∫ 1/sqrt(1−x) = 2
        let v = quadrature(|x, _| Ok(-Float::with_val(x.prec(), x.ln_ref())), &c).unwrap();
        assert!((v - 1u32).abs().to_f64() < 1e-25);
        let v = quadrature(|_, y| Ok(Float::with_val(y.prec(), y.recip_sqrt_ref())), &c).unwrap();
        assert!((v - 2u32).abs().to_f64() < 1e-25);
    }

    #[test]
    fn interior_kink_reports_failure() {
        let c = PrecisionContext::new(64).unwrap();
        let r = quadrature(|x, _| Ok(Float::with_val(x.prec(), x - 1.0 / 3.0).abs()), &c);
        assert!(matches!(r, Err(Error::Quadrature(_))));
    }
}
