use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Float, Rational};

use super::IdentityResult;
use crate::error::Result;
use crate::exact::{bernoulli_poly, norlund_number_scaled};
use crate::precision::{
    digamma, gamma, hurwitz_zeta_oracle, pi, polygamma, riemann_zeta_oracle, MPComplex, PrecisionContext,
};
use crate::series::{
    alpha_coeff, beta_odd_value, dirichlet_beta, euler_sum_zeta3, euler_sum_zeta3_tail, euler_sum_zeta4,
    euler_sum_zeta4_tail, half_argument_residual, hurwitz_zeta, hurwitz_zeta_alt, partial_a_rhs, riemann_zeta,
};

const SUITE: &str = "series";

/// Sizes of the randomized parts of [`series_suite`].
#[derive(Clone, Copy, Debug)]
pub struct SeriesGrid {
    /// Random `(s, a)` compared with the oracle.
    pub oracle_points: usize,
    /// Random points for each of the two consistency identities.
    pub identity_points: usize,
    /// Terms of the Euler sums.
    pub euler_terms: usize,
}

impl Default for SeriesGrid {
    fn default() -> Self {
        SeriesGrid { oracle_points: 200, identity_points: 50, euler_terms: 100_000 }
    }
}

/// `|a − b|/|b|`, or `|a|` when `b = 0`.
pub(crate) fn rel(a: &MPComplex, b: &MPComplex) -> f64 {
    let d = (a - b).abs();
    let m = b.abs();
    if m.is_zero() {
        d.to_f64()
    } else {
        (d / m).to_f64()
    }
}

pub(crate) fn tight(ctx: &PrecisionContext) -> f64 {
    (-(ctx.target_bits() as f64) + 8.0).exp2()
}

/// `s` uniform in the disk `|s| ≤ 10` with `|s − 1| ≥ 0.1`.
pub(crate) fn random_s(rng: &mut ChaCha8Rng, p: u32) -> MPComplex {
    loop {
        let (x, y): (f64, f64) = (rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        if x * x + y * y <= 100.0 && (x - 1.0).hypot(y) >= 0.1 {
            return MPComplex::from_f64(p, x, y);
        }
    }
}

/// `a` uniform in `(0, 5]`.
pub(crate) fn random_a(rng: &mut ChaCha8Rng, p: u32) -> Float {
    Float::with_val(p, 5.0 * (1.0 - rng.gen::<f64>()))
}

fn worst(name: &str, values: impl IntoIterator<Item = Result<(f64, String)>>, tol: f64) -> Result<IdentityResult> {
    let mut max = 0.0f64;
    let mut at = String::new();
    let mut count = 0;
    for v in values {
        let (r, label) = v?;
        count += 1;
        if !(r <= max) {
            max = r;
            at = label;
        }
    }
    Ok(IdentityResult::new(SUITE, name, max, tol).with_note(format!("{count} points, worst at {at}")))
}

/// `ζ(0,a) = 1/2 − a` and `ζ(1−m,a) = −B_m(a)/m`, `m ≤ 8`, `a ∈ {1/4, 1/3, 1, 7/2}`.
pub fn negative_integer_values(ctx: &PrecisionContext) -> Result<IdentityResult> {
    let p = ctx.working_bits();
    let mut vals = Vec::new();
    for a in [Rational::from((1, 4)), Rational::from((1, 3)), Rational::from(1), Rational::from((7, 2))] {
        let ac = MPComplex::from_rational(p, &a);
        let z0 = hurwitz_zeta(&MPComplex::zero(p), &ac, ctx)?.value;
        let want = MPComplex::from_rational(p, &(Rational::from((1, 2)) - &a));
        vals.push(Ok((rel(&z0, &want), format!("s=0 a={a}"))));
        for m in 1..=8usize {
            let z = hurwitz_zeta(&MPComplex::from_i64(p, 1 - m as i64), &ac, ctx)?.value;
            let want = MPComplex::from_rational(p, &(-bernoulli_poly(m, &a) / Rational::from(m)));
            vals.push(Ok((rel(&z, &want), format!("s={} a={a}", 1 - m as i64))));
        }
    }
    worst("zeta(1-m,a) = -B_m(a)/m, m<=8", vals, tight(ctx))
}

/// `|ζ(−2n)|` for `n ≤ 5` from the Riemann zeta series.
pub fn trivial_zeros(ctx: &PrecisionContext) -> Result<IdentityResult> {
    let p = ctx.working_bits();
    let vals = (1..=5).map(|n| {
        let z = riemann_zeta(&MPComplex::from_i64(p, -2 * n), ctx)?;
        Ok((z.value.abs().to_f64(), format!("s={}", -2 * n)))
    });
    worst("zeta(-2n) = 0, n<=5", vals, tight(ctx))
}

/// Nörlund series against the Euler–Maclaurin oracle on random `(s, a)`.
pub fn oracle_agreement(ctx: &PrecisionContext, seed: u64, points: usize) -> Result<IdentityResult> {
    let p = ctx.working_bits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid: Vec<_> = (0..points).map(|_| (random_s(&mut rng, p), random_a(&mut rng, p))).collect();
    let vals = grid.iter().map(|(s, a)| {
        let z = hurwitz_zeta(s, &MPComplex::from_real(a.clone()), ctx)?.value;
        let o = hurwitz_zeta_oracle(s, a, ctx)?;
        Ok((rel(&z, &o), format!("s={} a={}", s.to_decimal(6), a.to_f64())))
    });
    worst("hurwitz_zeta = Euler-Maclaurin oracle", vals, tight(ctx))
}

/// `L(1) = π/4`, `L(3) = π³/32` in closed form, `L(1)` from the series,
/// `L(2)` against the oracle and against the digits 0.91596559.
pub fn dirichlet_beta_values(ctx: &PrecisionContext) -> Result<Vec<IdentityResult>> {
    let p = ctx.working_bits();
    let pi = pi(p);
    let quarter = MPComplex::from_real(Float::with_val(p, &pi / 4u32));
    let cube = MPComplex::from_real(Float::with_val(p, Float::with_val(p, pi.square_ref()) * &pi) / 32u32);
    let mut out = Vec::new();
    let l1 = MPComplex::from_real(beta_odd_value(0, ctx));
    out.push(IdentityResult::new(SUITE, "L(1) = pi/4 (Bernoulli form)", rel(&l1, &quarter), tight(ctx)));
    let l3 = MPComplex::from_real(beta_odd_value(1, ctx));
    out.push(IdentityResult::new(SUITE, "L(3) = pi^3/32 (Bernoulli form)", rel(&l3, &cube), tight(ctx)));
    let s1 = dirichlet_beta(&MPComplex::one(p), ctx)?.value;
    out.push(IdentityResult::new(SUITE, "L(1) = pi/4 (series)", rel(&s1, &quarter), tight(ctx)));
    let l2 = dirichlet_beta(&MPComplex::from_i64(p, 2), ctx)?.value;
    let two = MPComplex::from_i64(p, 2);
    let o = &hurwitz_zeta_oracle(&two, &Float::with_val(p, 0.25), ctx)?
        - &hurwitz_zeta_oracle(&two, &Float::with_val(p, 0.75), ctx)?;
    let o = o.div_i64(16);
    out.push(IdentityResult::new(SUITE, "L(2) = oracle", (&l2 - &o).abs().to_f64(), 1e-12));
    let digits = crate::precision::format_float(&l2.re, 9);
    let shown = Float::with_val(p, Float::parse("0.91596559").expect("literal"));
    out.push(
        IdentityResult::new(SUITE, "L(2) = 0.91596559...", Float::with_val(p, &l2.re - &shown).abs().to_f64(), 1e-8)
            .with_note(format!("value {digits}")),
    );
    Ok(out)
}

/// Euler sums at `N` terms against the oracle `ζ(3)`, `ζ(4)`: the residual
/// must lie within ten times the tail estimate.
pub fn euler_sums(ctx: &PrecisionContext, n: usize) -> Result<Vec<IdentityResult>> {
    let p = ctx.working_bits();
    let z3 = riemann_zeta_oracle(&MPComplex::from_i64(p, 3), ctx)?.re;
    let z4 = riemann_zeta_oracle(&MPComplex::from_i64(p, 4), ctx)?.re;
    let r3 = Float::with_val(p, &z3 - euler_sum_zeta3(n, ctx)?).to_f64();
    let r4 = Float::with_val(p, &z4 - euler_sum_zeta4(n, ctx)?).to_f64();
    let t3 = euler_sum_zeta3_tail(n, ctx)?.to_f64();
    let t4 = euler_sum_zeta4_tail(n, ctx)?.to_f64();
    Ok(vec![
        IdentityResult::new(SUITE, format!("sum H_k/(k+1)^2 -> zeta(3), N={n}"), r3.abs(), 10.0 * t3)
            .with_note(format!("residual/tail = {:.4}", r3 / t3)),
        IdentityResult::new(SUITE, format!("sum [H_k^2-H_k^(2)]/(2(k+1)^2) -> zeta(4), N={n}"), r4.abs(), 10.0 * t4)
            .with_note(format!("residual/tail = {:.4}", r4 / t4)),
    ])
}

/// `ζ(s,1/2) = (2^s − 1)ζ(s)` and `∂_a ζ(s,a) = −sζ(s+1,a)` on random points.
pub fn consistency_identities(ctx: &PrecisionContext, seed: u64, points: usize) -> Result<Vec<IdentityResult>> {
    let p = ctx.working_bits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let half: Vec<_> = (0..points).map(|_| random_s(&mut rng, p)).collect();
    let vals = half.iter().map(|s| Ok((half_argument_residual(s, ctx)?.to_f64(), s.to_decimal(6))));
    let a = worst("zeta(s,1/2) = (2^s-1) zeta(s)", vals, tight(ctx))?;
    let mut pts = Vec::new();
    while pts.len() < points {
        let s = random_s(&mut rng, p);
        if s.abs() >= 0.1 {
            pts.push((s, random_a(&mut rng, p)));
        }
    }
    let vals = pts.iter().map(|(s, a)| {
        let lhs = partial_a_rhs(s, &MPComplex::from_real(a.clone()), ctx)?.value;
        let z = hurwitz_zeta_oracle(&s.add_i64(1), a, ctx)?;
        let rhs = -&(s * &z);
        Ok((rel(&lhs, &rhs), format!("s={} a={}", s.to_decimal(6), a.to_f64())))
    });
    let b = worst("d/da zeta(s,a) = -s zeta(s+1,a)", vals, tight(ctx))?;
    Ok(vec![a, b])
}

/// The remaining series and backbone checks.
pub fn backbone_identities(ctx: &PrecisionContext, seed: u64) -> Result<Vec<IdentityResult>> {
    let p = ctx.working_bits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbacb);
    let mut out = Vec::new();

    let xs: Vec<f64> = (0..100).map(|_| 10.0 * (1.0 - rng.gen::<f64>())).collect();
    let vals = xs.iter().map(|&x| {
        let z = MPComplex::from_f64(p, x, 0.0);
        let lhs = digamma(&z.add_i64(1), ctx)?;
        let rhs = &digamma(&z, ctx)? + &z.recip();
        Ok((rel(&lhs, &rhs), format!("x={x}")))
    });
    out.push(worst("psi(x+1) = psi(x) + 1/x", vals, tight(ctx))?);
    let vals = xs.iter().map(|&x| {
        let z = MPComplex::from_f64(p, x, 0.0);
        let lhs = polygamma(1, &z.add_i64(1), ctx)?;
        let rhs = &polygamma(1, &z, ctx)? - &z.sqr().recip();
        Ok((rel(&lhs, &rhs), format!("x={x}")))
    });
    out.push(worst("psi'(x+1) = psi'(x) - 1/x^2", vals, tight(ctx))?);

    let ss: Vec<_> = (0..20).map(|_| random_s(&mut rng, p)).collect();
    let vals = ss.iter().map(|s| {
        let lhs = hurwitz_zeta_oracle(s, &Float::with_val(p, 0.5), ctx)?;
        let two_s = MPComplex::from_i64(p, 2).pow(s).add_i64(-1);
        let rhs = &two_s * &riemann_zeta_oracle(s, ctx)?;
        Ok((rel(&lhs, &rhs), s.to_decimal(6)))
    });
    out.push(worst("oracle: zeta(s,1/2) = (2^s-1) zeta(s)", vals, tight(ctx))?);

    let hi = ctx.raised(64);
    let esc = (-(ctx.target_bits() as f64) + 2.0).exp2();
    let pts: Vec<_> = (0..10).map(|_| (random_s(&mut rng, p), random_a(&mut rng, p))).collect();
    let vals = pts.iter().map(|(s, a)| {
        let a = MPComplex::from_real(a.clone());
        let lo = hurwitz_zeta(s, &a, ctx)?.value;
        let up = hurwitz_zeta(&s.with_prec(hi.working_bits()), &a.with_prec(hi.working_bits()), &hi)?.value;
        Ok((rel(&lo, &up.with_prec(p)), s.to_decimal(6)))
    });
    out.push(worst("precision escalation by 64 bits", vals, esc)?);

    let vals = pts.iter().filter(|(s, _)| s.abs() > 0.1).map(|(s, a)| {
        let ac = MPComplex::from_real(a.clone());
        let lhs = hurwitz_zeta_alt(s, &ac, ctx)?.value;
        let z = hurwitz_zeta_oracle(&s.add_i64(1), a, ctx)?;
        let pw = ac.pow(&-s);
        let rhs = &gamma(s, ctx)? * &(&(s * &z) - &pw);
        Ok((rel(&lhs, &rhs), format!("s={} a={}", s.to_decimal(6), a.to_f64())))
    });
    out.push(worst("Gamma(s)[s zeta(s+1,a) - a^-s] series", vals, tight(ctx))?);

    // Σ_{ℓ≥1} Γ(ℓ)/Γ(x+ℓ+1) = 1/(x²Γ(x)), cut at K terms
    for x in [0.5, 1.0, 2.0] {
        let k_max = ctx.max_terms().min(10_000);
        let xf = Float::with_val(p, x);
        let g = gamma(&MPComplex::from_real(xf.clone()), ctx)?.re;
        let want = Float::with_val(p, Float::with_val(p, xf.square_ref()) * &g).recip();
        let mut t = gamma(&MPComplex::from_f64(p, x + 2.0, 0.0), ctx)?.re.recip();
        let mut sum = t.clone();
        for l in 1..k_max {
            t *= l as u32;
            t /= Float::with_val(p, &xf + (l as u32 + 1));
            sum += &t;
        }
        let tail = t.to_f64() * k_max as f64 / x;
        let r = Float::with_val(p, &want - &sum).to_f64();
        out.push(
            IdentityResult::new(SUITE, format!("sum Gamma(l)/Gamma(x+l+1) = 1/(x^2 Gamma(x)), x={x}"), r.abs(), 2.0 * tail)
                .with_note(format!("K={k_max}, residual/tail = {:.4}", r / tail)),
        );
    }

    // generating functions, partial sums against closed forms
    const K: usize = 40;
    for (z, x) in [((0.3, 0.7), 0.5), ((-1.5, 2.0), -0.5), ((2.5, 0.0), 0.25)] {
        let zc = MPComplex::from_f64(p, z.0, z.1);
        let xc = MPComplex::from_f64(p, x, 0.0);
        let lhs = (&zc * &(&xc.add_i64(1).ln() / &xc).ln()).exp();
        let s = zc.add_i64(1);
        let mx = -&xc;
        let mut sum = MPComplex::zero(p);
        let mut pw = MPComplex::one(p);
        for k in 0..K {
            sum = &sum + &(&alpha_coeff(k, &s) * &pw);
            pw = &pw * &mx;
        }
        let next = (&alpha_coeff(K, &s) * &pw).abs().to_f64();
        let bound = next / (1.0 - x.abs());
        out.push(IdentityResult::new(
            SUITE,
            format!("(ln(1+x)/x)^z partial sum, z={}+{}i x={x}", z.0, z.1),
            (&sum - &lhs).abs().to_f64(),
            bound,
        ));
    }
    for z in [(0.5, 0.0), (-0.5, 0.0), (0.3, 0.3)] {
        let zc = MPComplex::from_f64(p, z.0, z.1);
        let z1 = zc.add_i64(1);
        let closed = &zc / &(&z1 * &z1.ln());
        let mut sum = MPComplex::zero(p);
        let mut pw = MPComplex::one(p);
        for n in 0..K {
            let b = Float::with_val(p, &norlund_number_scaled(n));
            sum = &sum + &pw.mul_real(&b);
            pw = &pw * &zc;
        }
        let b = Float::with_val(p, &norlund_number_scaled(K));
        let bound = pw.mul_real(&b).abs().to_f64() / (1.0 - zc.abs().to_f64());
        out.push(IdentityResult::new(
            SUITE,
            format!("sum B_n^(n)/n! z^n partial sum, z={}+{}i", z.0, z.1),
            (&sum - &closed).abs().to_f64(),
            bound,
        ));
    }
    Ok(out)
}

/// Everything above with the given grid sizes.
pub fn series_suite(ctx: &PrecisionContext, seed: u64, grid: SeriesGrid) -> Result<Vec<IdentityResult>> {
    let mut out = vec![negative_integer_values(ctx)?, trivial_zeros(ctx)?];
    out.push(oracle_agreement(ctx, seed, grid.oracle_points)?);
    out.extend(dirichlet_beta_values(ctx)?);
    out.extend(euler_sums(ctx, grid.euler_terms)?);
    out.extend(consistency_identities(ctx, seed, grid.identity_points)?);
    out.extend(backbone_identities(ctx, seed)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        let ctx = PrecisionContext::new(96).unwrap();
        let grid = SeriesGrid { oracle_points: 10, identity_points: 5, euler_terms: 2000 };
        for r in series_suite(&ctx, 7, grid).unwrap() {
            assert!(r.passed, "{r:?}");
        }
    }
}
