use rug::Float;

use super::{check_a, Method, StieltjesResult};
use crate::error::{Error, Result};
use crate::precision::{hurwitz_zeta_oracle, MPComplex, PrecisionContext};

/// Steps `h = 2^-8, 2^-9, 2^-10` of the central differences.
const STEPS: [i32; 3] = [8, 9, 10];

/// Value at `x = 0` and slope of the quadratic through `(x_i, y_i)`.
fn quadratic_at_zero(x: &[Float; 3], y: &[Float; 3], p: u32) -> (Float, Float) {
    let mut c0 = Float::new(p);
    let mut c1 = Float::new(p);
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let den = Float::with_val(p, &x[i] - &x[j]) * Float::with_val(p, &x[i] - &x[k]);
        let w = Float::with_val(p, &y[i] / &den);
        // L_i(0) = x_j x_k/den, L_i'(0) = −(x_j + x_k)/den
        c0 += Float::with_val(p, &x[j] * &x[k]) * &w;
        c1 -= Float::with_val(p, &x[j] + &x[k]) * &w;
    }
    (c0, c1)
}

/// Value at `x = 0` of the line through the last two points.
fn linear_at_zero(x: &[Float; 3], y: &[Float; 3], p: u32) -> Float {
    let den = Float::with_val(p, &x[1] - &x[2]);
    let num = Float::with_val(p, &y[2] * &x[1]) - Float::with_val(p, &y[1] * &x[2]);
    num / den
}

/// `γ_n(a)`, `n ≤ 2`, from the oracle alone.
///
/// With `F(s) = ζ(s,a) − 1/(s−1)` the even part `[F(1+h)+F(1−h)]/2` is
/// `γ₀ + γ₂h²/2 + O(h⁴)` and the odd part `[F(1+h)−F(1−h)]/(2h)` is
/// `−γ₁ + O(h²)`. Both are extrapolated to `h = 0` by a quadratic in `h²`;
/// the tail estimate is the change from a linear extrapolation.
pub fn laurent_fit(order: u32, a: &Float, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    check_a(a)?;
    if order > 2 {
        return Err(Error::Range(format!("laurent_fit covers orders 0..=2, got {order}")));
    }
    let hi = ctx.raised(48);
    let p = hi.working_bits();
    let mut x: [Float; 3] = std::array::from_fn(|_| Float::new(p));
    let mut even: [Float; 3] = std::array::from_fn(|_| Float::new(p));
    let mut odd: [Float; 3] = std::array::from_fn(|_| Float::new(p));
    for (i, &e) in STEPS.iter().enumerate() {
        let h = Float::with_val(p, Float::i_exp(1, -e));
        let plus = MPComplex::from_real(Float::with_val(p, 1u32 + &h));
        let minus = MPComplex::from_real(Float::with_val(p, 1u32 - Float::with_val(p, &h)));
        let inv = Float::with_val(p, h.recip_ref());
        let fp = hurwitz_zeta_oracle(&plus, a, &hi)?.re - &inv;
        let fm = hurwitz_zeta_oracle(&minus, a, &hi)?.re + &inv;
        even[i] = Float::with_val(p, &fp + &fm) / 2u32;
        odd[i] = Float::with_val(p, &fp - &fm) / Float::with_val(p, &h * 2u32);
        x[i] = Float::with_val(p, h.square_ref());
    }
    let (value, rough) = match order {
        0 => (quadratic_at_zero(&x, &even, p).0, linear_at_zero(&x, &even, p)),
        1 => (-quadratic_at_zero(&x, &odd, p).0, -linear_at_zero(&x, &odd, p)),
        _ => {
            let (_, c1) = quadratic_at_zero(&x, &even, p);
            // slope from the last two points
            let lin = Float::with_val(p, &even[1] - &even[2]) / Float::with_val(p, &x[1] - &x[2]);
            (c1 * 2u32, lin * 2u32)
        }
    };
    let wp = ctx.working_bits();
    let tail = Float::with_val(wp, &value - &rough).abs();
    Ok(StieltjesResult {
        order,
        a: a.clone(),
        value: Float::with_val(wp, value),
        method: Method::LaurentFit,
        tail_estimate: tail,
        terms_used: 2 * STEPS.len(),
    })
}
