use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{euler_gamma, pi, PrecisionContext};

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("an Euler sum needs N ≥ 1 terms".into()));
    }
    Ok(())
}

/// `Σ_{k=1}^N H_k/(k+1)²`, which tends to `ζ(3)`.
pub fn euler_sum_zeta3(n: usize, ctx: &PrecisionContext) -> Result<Float> {
    check_n(n)?;
    let p = ctx.working_bits();
    let mut h = Float::new(p);
    let mut sum = Float::new(p);
    for k in 1..=n {
        h += Float::with_val(p, k as u32).recip();
        let d = Float::with_val(p, (k + 1) as u64).square();
        sum += Float::with_val(p, &h / d);
    }
    Ok(sum)
}

/// `1/4 + Σ_{k=1}^N H_{k+1}/(k+2)²`, the same sum started one term later.
pub fn euler_sum_zeta3_offset(n: usize, ctx: &PrecisionContext) -> Result<Float> {
    check_n(n)?;
    let p = ctx.working_bits();
    let mut h = Float::with_val(p, 1);
    let mut sum = Float::with_val(p, 0.25);
    for k in 1..=n {
        h += Float::with_val(p, (k + 1) as u32).recip();
        let d = Float::with_val(p, (k + 2) as u64).square();
        sum += Float::with_val(p, &h / d);
    }
    Ok(sum)
}

/// Leading asymptotics `(ln N + γ + 1)/N` of `Σ_{k>N} H_k/(k+1)²`.
pub fn euler_sum_zeta3_tail(n: usize, ctx: &PrecisionContext) -> Result<Float> {
    check_n(n)?;
    let p = ctx.working_bits();
    let l = Float::with_val(p, n as u64).ln() + euler_gamma(p);
    Ok((l + 1u32) / n as u64)
}

/// `½ Σ_{k=2}^N [H_k² − H_k^(2)]/(k+1)²`, which tends to `ζ(4)`.
pub fn euler_sum_zeta4(n: usize, ctx: &PrecisionContext) -> Result<Float> {
    check_n(n)?;
    let p = ctx.working_bits();
    let mut h = Float::with_val(p, 1);
    let mut h2 = Float::with_val(p, 1);
    let mut sum = Float::new(p);
    for k in 2..=n {
        let r = Float::with_val(p, k as u32).recip();
        h2 += Float::with_val(p, r.square_ref());
        h += r;
        let num = Float::with_val(p, h.square_ref()) - &h2;
        let d = Float::with_val(p, (k + 1) as u64).square();
        sum += num / d;
    }
    Ok(sum / 2u32)
}

/// Leading asymptotics `½[(L+1)² + 1 − ζ(2)]/N`, `L = ln N + γ`, of the tail of
/// [`euler_sum_zeta4`].
pub fn euler_sum_zeta4_tail(n: usize, ctx: &PrecisionContext) -> Result<Float> {
    check_n(n)?;
    let p = ctx.working_bits();
    let l = Float::with_val(p, n as u64).ln() + euler_gamma(p) + 1u32;
    let z2 = Float::with_val(p, pi(p).square() / 6u32);
    Ok((l.square() + 1u32 - z2) / (2 * n as u64))
}
