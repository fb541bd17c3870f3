//! The twelve acceptance criteria, each at its stated tolerance. Every test
//! prints one `PASS`/`FAIL` line before asserting.

use std::time::{Duration, Instant};

use norlund::exact::{bernoulli_number, factorial, norlund_number, BigRational};
use norlund::precision::{format_float, PrecisionContext};
use norlund::series::{alpha_coeff_exact, alpha_coeff_prime_exact, alpha_coeff_prime_via_dalpha};
use norlund::verify::{self, IdentityResult};

const SEED: u64 = 20_240_601;

fn two_pow(e: i32) -> f64 {
    2f64.powi(e)
}

fn report(n: u32, title: &str, ok: bool, detail: &str) {
    println!("{} criterion {n:>2}: {title} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {detail}");
}

/// Largest residual over `results`, and whether each is within `tol`.
fn within(results: &[&IdentityResult], tol: f64) -> (bool, f64) {
    let worst = results.iter().map(|r| r.residual).fold(0.0, f64::max);
    (results.iter().all(|r| r.residual.is_finite() && r.residual <= tol), worst)
}

fn find<'a>(results: &'a [IdentityResult], prefix: &str) -> Vec<&'a IdentityResult> {
    let v: Vec<_> = results.iter().filter(|r| r.name.starts_with(prefix)).collect();
    assert!(!v.is_empty(), "no identity named {prefix}...");
    v
}

#[test]
fn criterion_01_exact_suite() {
    let start = Instant::now();
    let results = verify::exact_suite();
    let elapsed = start.elapsed();
    let failed: Vec<_> = results.iter().filter(|r| !r.passed || r.residual != 0.0).map(|r| r.name.as_str()).collect();
    let ok = failed.is_empty() && elapsed < Duration::from_secs(10);
    report(
        1,
        "exact identity suite, zero residual, under 10 s",
        ok,
        &format!("{} identities, failed {failed:?}, {elapsed:.2?}", results.len()),
    );
}

#[test]
fn criterion_02_negative_integer_values() {
    let ctx = PrecisionContext::new(128).unwrap();
    assert_eq!(ctx.working_bits(), 192);
    let r = verify::negative_integer_values(&ctx).unwrap();
    let ok = r.residual <= two_pow(-120);
    report(2, "zeta(1-m,a) = -B_m(a)/m and zeta(0,a) = 1/2-a", ok, &format!("worst relative error {:.2e}", r.residual));
}

#[test]
fn criterion_03_trivial_zeros() {
    let ctx = PrecisionContext::new(128).unwrap();
    let r = verify::trivial_zeros(&ctx).unwrap();
    let ok = r.residual <= two_pow(-120);
    report(3, "|zeta(-2n)| <= 2^-120, n = 1..5", ok, &format!("max |zeta(-2n)| = {:.2e}", r.residual));
}

#[test]
fn criterion_04_oracle_agreement() {
    let ctx = PrecisionContext::new(128).unwrap();
    let start = Instant::now();
    let r = verify::oracle_agreement(&ctx, SEED, 200).unwrap();
    let elapsed = start.elapsed();
    let ok = r.residual <= two_pow(-120) && elapsed < Duration::from_secs(60);
    report(
        4,
        "200 random (s,a) against the Euler-Maclaurin oracle",
        ok,
        &format!("worst relative error {:.2e}, {elapsed:.2?}, {}", r.residual, r.note.unwrap_or_default()),
    );
}

#[test]
fn criterion_05_dirichlet_beta() {
    let ctx = PrecisionContext::new(128).unwrap();
    let results = verify::dirichlet_beta_values(&ctx).unwrap();
    let (closed_ok, closed) = within(&find(&results, "L(1) = pi/4 (Bernoulli"), two_pow(-120));
    let (cube_ok, cube) = within(&find(&results, "L(3) = pi^3/32"), two_pow(-120));
    let (oracle_ok, oracle) = within(&find(&results, "L(2) = oracle"), 1e-12);
    let l2 = norlund::series::dirichlet_beta(
        &norlund::precision::MPComplex::from_i64(ctx.working_bits(), 2),
        &ctx,
    )
    .unwrap()
    .value
    .re;
    let digits = format_float(&l2, 20);
    let digits_ok = digits.starts_with("9.1596559");
    report(
        5,
        "Dirichlet beta L(1), L(3) closed forms, L(2) digits and oracle",
        closed_ok && cube_ok && oracle_ok && digits_ok,
        &format!("L(1) {closed:.1e}, L(3) {cube:.1e}, L(2) = {digits} vs oracle {oracle:.1e}"),
    );
}

#[test]
fn criterion_06_log_sum_constant() {
    let ctx = PrecisionContext::new(128).unwrap();
    let results = verify::constants(&ctx).unwrap();
    let reps = find(&results, "sum (-1)^(k+1) zeta(k+1)/k representation");
    assert_eq!(reps.len(), 4);
    let (ok, worst) = within(&reps, 1e-10);
    report(6, "log-sum constant = 1.25774688694, four representations", ok, &format!("worst deviation {worst:.2e}"));
}

#[test]
fn criterion_07_gamma1() {
    let ctx = PrecisionContext::new(128).unwrap();
    let results = verify::gamma1_methods(&ctx).unwrap();
    let series: Vec<_> = find(&results, "gamma_1 series").into_iter().chain(find(&results, "gamma_1 binomial")).collect();
    let quad: Vec<_> = ["gamma_1 4F3", "gamma_1 digamma", "gamma_1 pole-subtracted"]
        .iter()
        .flat_map(|p| find(&results, p))
        .collect();
    let (s_ok, s_worst) = within(&series, 1e-15);
    let (q_ok, q_worst) = within(&quad, 1e-8);
    let (r_ok, r_dev) = within(&find(&results, "gamma_1 = -0.0728158454836767"), 1e-16);
    report(
        7,
        "gamma_1(1) four ways against the Laurent fit",
        s_ok && q_ok && r_ok && quad.len() == 3,
        &format!("series {s_worst:.1e}, quadrature {q_worst:.1e}, reference digits {r_dev:.1e}"),
    );
}

#[test]
fn criterion_08_gamma2() {
    let ctx = PrecisionContext::new(128).unwrap();
    let r = verify::gamma2_check(&ctx).unwrap();
    let ok = r.residual <= 1e-10;
    report(8, "gamma_2(1) series against the Laurent fit", ok, &format!("|diff| {:.2e}, {}", r.residual, r.note.unwrap_or_default()));
}

#[test]
fn criterion_09_euler_sums() {
    let ctx = PrecisionContext::new(128).unwrap();
    let results = verify::euler_sums(&ctx, 100_000).unwrap();
    let ok = results.len() == 2 && results.iter().all(|r| r.passed);
    let detail: Vec<String> =
        results.iter().map(|r| format!("{:.2e} ({})", r.residual, r.note.clone().unwrap_or_default())).collect();
    report(9, "Euler sums at N = 10^5 within 10x the tail estimate", ok, &detail.join("; "));
}

#[test]
fn criterion_10_rubinstein() {
    let q = |n: i64| BigRational::from(n);
    let sign = |k: usize| if k % 2 == 0 { 1i64 } else { -1 };
    let mut bad = Vec::new();
    for k in 0..=20usize {
        if alpha_coeff_exact(k, &q(-(k as i64))) != BigRational::from((sign(k), factorial(k))) {
            bad.push(format!("alpha_{k}(-{k})"));
        }
    }
    for k in 1..=20usize {
        let want = norlund_number(k) * sign(k) / (factorial(k) * k as u64);
        if alpha_coeff_prime_exact(k, &q(1)) != want || alpha_coeff_prime_via_dalpha(k, &q(1)).unwrap() != want {
            bad.push(format!("alpha_{k}'(1)"));
        }
    }
    for m in 0..=5usize {
        let n = 2 * m + 2;
        let b = bernoulli_number(n) / factorial(n);
        if alpha_coeff_exact(n, &q(-(2 * m as i64) - 1)) != b {
            bad.push(format!("alpha_{n}(-{})", 2 * m + 1));
        }
        if alpha_coeff_exact(n, &q(-(2 * m as i64))) != -b * (2 * m as u64 + 1) {
            bad.push(format!("alpha_{n}(-{})", 2 * m));
        }
    }
    report(10, "Rubinstein coefficients, exact", bad.is_empty(), &format!("failures {bad:?}"));
}

#[test]
fn criterion_11_complex_stirling() {
    let ctx = PrecisionContext::new(128).unwrap();
    let results = verify::appendix_b(&ctx, SEED, 50).unwrap();
    let (int_ok, int_worst) = within(&find(&results, "s(lambda,k) = integer"), two_pow(-120));
    let rec = find(&results, "s(l,k) = s(l-1,k-1)");
    let (rec_ok, rec_worst) = within(&rec, two_pow(-120));
    report(
        11,
        "complex Stirling numbers: integer values and the recursion grid",
        int_ok && rec_ok,
        &format!("integer {int_worst:.1e}, recursion {rec_worst:.1e} ({})", rec[0].note.clone().unwrap_or_default()),
    );
}

#[test]
fn criterion_12_consistency_identities() {
    let ctx = PrecisionContext::new(128).unwrap();
    let results = verify::consistency_identities(&ctx, SEED, 50).unwrap();
    let tol = two_pow(-(ctx.target_bits() as i32) + 8);
    let (ok, worst) = within(&results.iter().collect::<Vec<_>>(), tol);
    let notes: Vec<String> = results.iter().map(|r| format!("{} {:.1e}", r.name, r.residual)).collect();
    report(12, "half-argument and a-derivative identities on 50 points each", ok && results.len() == 2, &format!("worst {worst:.1e}: {}", notes.join("; ")));
}
