use rug::ops::Pow;
use rug::{Integer, Rational};

use super::IdentityResult;
use crate::exact::{
    bernoulli_number, bernoulli_poly, binomial, factorial, harmonic, harmonic_gen, norlund_number,
    norlund_number_scaled, norlund_poly, norlund_poly_dalpha, p_constant, p_constant_via_norlund,
    p_constant_via_stirling, stirling1, stirling2, RationalPolynomial,
};
use crate::series::{alpha_coeff_exact, alpha_coeff_prime_exact, alpha_coeff_prime_via_dalpha};

const SUITE: &str = "exact";

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// First index in `range` where `check` fails.
fn first_failure(range: impl IntoIterator<Item = usize>, mut check: impl FnMut(usize) -> bool) -> Option<usize> {
    range.into_iter().find(|&i| !check(i))
}

fn over(name: &str, range: impl IntoIterator<Item = usize>, check: impl FnMut(usize) -> bool) -> IdentityResult {
    match first_failure(range, check) {
        None => IdentityResult::exact(SUITE, name, true),
        Some(i) => IdentityResult::exact(SUITE, name, false).with_note(format!("fails at index {i}")),
    }
}

/// Truncated power series product, coefficients up to `deg`.
fn series_mul(a: &[Rational], b: &[Rational], deg: usize) -> Vec<Rational> {
    let mut out = vec![Rational::new(); deg + 1];
    for (i, x) in a.iter().enumerate().take(deg + 1) {
        for (j, y) in b.iter().enumerate().take(deg + 1 - i) {
            out[i + j] += Rational::from(x * y);
        }
    }
    out
}

fn series_pow(a: &[Rational], n: usize, deg: usize) -> Vec<Rational> {
    let mut out = vec![Rational::new(); deg + 1];
    out[0] = Rational::from(1);
    for _ in 0..n {
        out = series_mul(&out, a, deg);
    }
    out
}

/// `ln(1+x)/x = Σ (−1)^j x^j/(j+1)`.
fn log_over_x(deg: usize) -> Vec<Rational> {
    (0..=deg).map(|j| q(sign(j), j as i64 + 1)).collect()
}

/// `∂_α B_n^(α)` from the digamma form
/// `[Σ_r 1/(α+r)] B_n^(α) − Σ_k C(α+n,n−k) C(α+k−1,k)/(k+α) · n!/(n+k)! · Σ_j (−1)^j C(k,j) j^(n+k)`.
pub fn dalpha_digamma_form(n: usize, alpha: &Rational) -> Rational {
    let mut harm = Rational::new();
    for r in 0..=n {
        harm += Rational::from(alpha + Integer::from(r)).recip();
    }
    let mut v = harm * norlund_poly(n).eval(alpha);
    for k in 0..=n {
        let c1 = RationalPolynomial::binomial(&Rational::from(n), n - k).eval(alpha);
        let c2 = RationalPolynomial::binomial(&Rational::from(k as i64 - 1), k).eval(alpha);
        // Σ_j (−1)^j C(k,j) j^(n+k) = (−1)^k k! S(n+k,k)
        let diff = Integer::from(sign(k)) * factorial(k) * stirling2(n + k, k);
        let t = c1 * c2 / Rational::from(alpha + Integer::from(k)) * Rational::from((factorial(n), factorial(n + k)))
            * diff;
        v -= t;
    }
    v
}

/// Every exact identity, each over its full index range.
pub fn exact_suite() -> Vec<IdentityResult> {
    let mut out = Vec::new();

    out.push(over("B_k^(k+1) = (-1)^k k!, k<=30", 0..=30, |k| {
        norlund_poly(k).eval(&Rational::from(k + 1)) == Rational::from(factorial(k) * sign(k))
    }));
    out.push(over("B_k^(k+2) = (-1)^k k! H_{k+1}, k<=30", 0..=30, |k| {
        norlund_poly(k).eval(&Rational::from(k + 2)) == harmonic(k + 1) * factorial(k) * sign(k)
    }));
    out.push(over("B_n^(n+3) = (-1)^n n! [H_{n+2}^2 - H_{n+2}^(2)], n<=30", 0..=30, |n| {
        let h = harmonic(n + 2);
        let want = (Rational::from(h.square_ref()) - harmonic_gen(n + 2, 2)) * factorial(n) * sign(n);
        norlund_poly(n).eval(&Rational::from(n + 3)) == want
    }));
    out.push(over("B_n^(n) = sum_k (-1)^k s(n,k)/(k+1), n<=30", 1..=30, |n| {
        let mut s = Rational::new();
        for k in 0..=n {
            s += Rational::from((stirling1(n, k) * sign(k), Integer::from(k + 1)));
        }
        norlund_number(n) == s
    }));
    out.push(over("s(m,n) = (m-1)!/(n-1)! B_{m-n}^(m)/(m-n)!, m<=20", 2..=20, |m| {
        (1..=m).all(|n| {
            let b = norlund_poly(m - n).eval(&Rational::from(m));
            let v = b * Rational::from((factorial(m - 1), factorial(n - 1) * factorial(m - n)));
            v == stirling1(m, n)
        })
    }));
    out.push(over("[ln(1+x)]^n = n! sum_k s(k,n) x^k/k!, n<=15", 1..=15, |n| {
        let deg = 15;
        let mut l = vec![Rational::new()];
        l.extend(log_over_x(deg - 1));
        let pw = series_pow(&l, n, deg);
        (0..=deg).all(|k| pw[k] == Rational::from((stirling1(k, n) * factorial(n), factorial(k))))
    }));
    out.push(over("p_{k+1}: Norlund-number form = Norlund-polynomial form = Stirling form, k<=30", 2..=31, |n| {
        let a = p_constant(n).expect("n >= 2");
        a == p_constant_via_norlund(n).expect("n >= 2") && a == p_constant_via_stirling(n).expect("n >= 2")
    }));
    out.push(over("sum_r (-1)^(n-r)/(n-r)! B_{n-r}^(n-r) H_{r+1} = n+1, n<=50", 0..=50, |n| {
        let mut s = Rational::new();
        for r in 0..=n {
            s += norlund_number_scaled(n - r) * harmonic(r + 1) * sign(n - r);
        }
        s == Rational::from(n + 1)
    }));
    out.push(over("recursive d/dalpha B_n^(alpha) = formal derivative, n<=30", 0..=30, |n| {
        *norlund_poly_dalpha(n) == norlund_poly(n).derivative()
    }));
    out.push(over("digamma form of d/dalpha B_n^(alpha) at alpha in {1/2,1,3/2,2}, n<=12", 0..=12, |n| {
        [q(1, 2), q(1, 1), q(3, 2), q(2, 1)]
            .iter()
            .all(|a| dalpha_digamma_form(n, a) == norlund_poly_dalpha(n).eval(a))
    }));
    out.push(over("(-1)^n (1-x)_n = sum_r C(n,r) x^r B_{n-r}^(n+1), n<=15", 0..=15, |n| {
        let lhs = RationalPolynomial::rising(&q(1, 1), n).reflect().scale(&q(sign(n), 1));
        let alpha = Rational::from(n + 1);
        let coeffs: Vec<Rational> =
            (0..=n).map(|r| norlund_poly(n - r).eval(&alpha) * binomial(n, r)).collect();
        lhs == RationalPolynomial::new(coeffs)
    }));
    out.push(over("B_n^(-1) = 1/(n+1), n<=30", 0..=30, |n| {
        norlund_poly(n).eval(&q(-1, 1)) == q(1, n as i64 + 1)
    }));
    out.push(over("roots: B_n^(1) = 0 and alpha^2 | B_n^(alpha) for odd n>1, B_n^(0) = 0 for n>0", 1..=40, |n| {
        let p = norlund_poly(n);
        let zero_at_origin = p.coeff(0) == 0;
        if n > 1 && n % 2 == 1 {
            zero_at_origin && p.coeff(1) == 0 && p.eval(&q(1, 1)) == 0
        } else {
            zero_at_origin
        }
    }));
    out.push(over("B_k^(k) = (-1)^k int_0^1 (t)_k dt, k<=30", 0..=30, |k| {
        let i = RationalPolynomial::rising(&Rational::new(), k).definite_integral(&Rational::new(), &q(1, 1));
        norlund_number(k) == i * sign(k)
    }));
    out.push(over("sum_n B_n^(n)/n! z^n = z/((1+z) ln(1+z)), 40 coefficients", [40], |deg| {
        let mut den = log_over_x(deg);
        den = series_mul(&den, &[q(1, 1), q(1, 1)], deg);
        let b: Vec<Rational> = (0..=deg).map(norlund_number_scaled).collect();
        let prod = series_mul(&b, &den, deg);
        prod[0] == 1 && prod[1..].iter().all(|c| *c == 0)
    }));
    out.push(over("(ln(1+x)/x)^m = m sum_k x^k/k! B_k^(m+k)/(m+k), m<=5, 20 coefficients", 1..=5, |m| {
        let deg = 20;
        let lhs = series_pow(&log_over_x(deg), m, deg);
        (0..=deg).all(|k| {
            let b = norlund_poly(k).eval(&Rational::from(m + k));
            lhs[k] == b * Rational::from((Integer::from(m), factorial(k) * (m + k) as u64))
        })
    }));
    out.push(over("B_n(mx) = m^(n-1) sum_k B_n(x + k/m), n<=10, m<=5", 0..=10, |n| {
        (1..=5usize).all(|m| {
            [q(0, 1), q(1, 3), q(-2, 5), q(7, 2)].iter().all(|x| {
                let lhs = bernoulli_poly(n, &Rational::from(x * Integer::from(m)));
                let mut rhs = Rational::new();
                for k in 0..m {
                    rhs += bernoulli_poly(n, &(x.clone() + q(k as i64, m as i64)));
                }
                rhs *= Rational::from((Integer::from(m).pow(n as u32), Integer::from(m)));
                lhs == rhs
            })
        })
    }));
    out.push(over("alpha_k(-k) = (-1)^k/k!, k<=20", 0..=20, |k| {
        alpha_coeff_exact(k, &Rational::from(-(k as i64))) == Rational::from((sign(k), factorial(k)))
    }));
    out.push(over("alpha_k'(1) = (-1)^k B_k^(k)/(k k!), k<=20", 1..=20, |k| {
        let want = norlund_number(k) * sign(k) / (factorial(k) * k as u64);
        alpha_coeff_prime_exact(k, &q(1, 1)) == want
            && alpha_coeff_prime_via_dalpha(k, &q(1, 1)).map(|v| v == want).unwrap_or(false)
    }));
    out.push(over("alpha_{2m+2}(-2m-1) = B_{2m+2}/(2m+2)!, m<=5", 0..=5, |m| {
        let n = 2 * m + 2;
        alpha_coeff_exact(n, &Rational::from(-(2 * m as i64) - 1)) == bernoulli_number(n) / factorial(n)
    }));
    out.push(over("alpha_{2m+2}(-2m) = -(2m+1) B_{2m+2}/(2m+2)!, m<=5", 0..=5, |m| {
        let n = 2 * m + 2;
        let want = -(bernoulli_number(n) / factorial(n)) * Integer::from(2 * m + 1);
        alpha_coeff_exact(n, &Rational::from(-(2 * m as i64))) == want
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_exact_identities_hold() {
        for r in exact_suite() {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn digamma_form_example() {
        // ∂_α B_1^(α) = −1/2
        assert_eq!(dalpha_digamma_form(1, &q(3, 2)), q(-1, 2));
    }
}
