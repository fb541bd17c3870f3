//! Exact combinatorics over arbitrary-size integers and rationals.
//!
//! Everything here is computed without rounding and memoized in the global
//! [`ExactCache`]. Indices are `usize`; the Nörlund polynomials are returned
//! as shared [`Arc`]s because the floating series reuse them heavily.

mod cache;
mod norlund;
mod poly;

use std::sync::Arc;

pub use cache::{ExactCache, DEFAULT_LIMIT};
pub use poly::RationalPolynomial;

pub use rug::Integer as BigInt;
pub use rug::Rational as BigRational;

use crate::error::{Error, Result};
use rug::{Integer, Rational};

/// `p/q`, with `/q` omitted for integers.
pub fn format_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` or a terminating decimal such as `-3.25` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    if let Some((num, den)) = t.split_once('/') {
        let n: Integer = num.trim().parse().map_err(|_| bad())?;
        let d: Integer = den.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::from((n, d)));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all = format!("{int_part}{frac_part}");
    let mut r = Rational::from(all.parse::<Integer>().map_err(|_| bad())?);
    let scale = exp - frac_part.len() as i32;
    let ten = Rational::from(Integer::from(Integer::u_pow_u(10, scale.unsigned_abs())));
    if scale >= 0 {
        r *= ten;
    } else {
        r /= ten;
    }
    Ok(if neg { -r } else { r })
}

pub fn factorial(n: usize) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n as u32, k as u32))
}

/// Rising factorial `(x)_n`.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::from(1);
    for j in 0..n {
        acc *= Rational::from(x + Integer::from(j));
    }
    acc
}

/// Signed Stirling number of the first kind `s(n,k)`.
pub fn stirling1(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::new();
    }
    ExactCache::global().stirling1_row(n)[k].clone()
}

/// Stirling number of the second kind `S(n,k)`.
pub fn stirling2(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::new();
    }
    ExactCache::global().stirling2_row(n)[k].clone()
}

/// Bernoulli number `B_n` with `B_1 = −1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    ExactCache::global().bernoulli(n)
}

/// The Bernoulli polynomial `B_n(x)` as a polynomial in `x`.
pub fn bernoulli_polynomial(n: usize) -> RationalPolynomial {
    let coeffs = (0..=n)
        .map(|j| bernoulli_number(n - j) * binomial(n, j))
        .collect();
    RationalPolynomial::new(coeffs)
}

/// `B_n(x)` at a rational point.
pub fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    bernoulli_polynomial(n).eval(x)
}

/// `H_n = Σ_{j≤n} 1/j`.
pub fn harmonic(n: usize) -> Rational {
    ExactCache::global().harmonic(n)
}

/// `H_n^(r) = Σ_{j≤n} 1/j^r`.
pub fn harmonic_gen(n: usize, r: u32) -> Rational {
    if r == 1 {
        return harmonic(n);
    }
    let mut acc = Rational::new();
    for j in 1..=n {
        acc += Rational::from((Integer::from(1), Integer::from(Integer::u_pow_u(j as u32, r))));
    }
    acc
}

/// The Nörlund polynomial `B_n^(α)`.
pub fn norlund_poly(n: usize) -> Arc<RationalPolynomial> {
    ExactCache::global().norlund_poly(n)
}

/// `∂_α B_n^(α)` from the derivative recursion.
pub fn norlund_poly_dalpha(n: usize) -> Arc<RationalPolynomial> {
    ExactCache::global().norlund_poly_dalpha(n)
}

/// `B_n^(α)/α` for `n ≥ 1`.
pub fn norlund_quotient(n: usize) -> Arc<RationalPolynomial> {
    ExactCache::global().norlund_quotient(n)
}

/// `q_k(s) = B_k^(s+k−1)/(s+k−1)` as a polynomial in `s`, `k ≥ 1`.
pub fn zeta_coefficient(k: usize) -> Arc<RationalPolynomial> {
    ExactCache::global().zeta_coefficient(k)
}

/// `B_n^(α)(x) = Σ_k C(n,k) B_k^(α) x^(n−k)` as a polynomial in `α`.
pub fn gen_bernoulli_poly(n: usize, x: &Rational) -> RationalPolynomial {
    let mut acc = RationalPolynomial::zero();
    let mut xp = Rational::from(1);
    for k in (0..=n).rev() {
        let c = Rational::from(&xp * binomial(n, k));
        acc = &acc + &norlund_poly(k).scale(&c);
        xp *= x;
    }
    acc
}

/// Nörlund number `B_n^(n)`.
pub fn norlund_number(n: usize) -> Rational {
    ExactCache::global().norlund_number_scaled(n) * factorial(n)
}

/// `B_n^(n)/n!`, the form the series use.
pub fn norlund_number_scaled(n: usize) -> Rational {
    ExactCache::global().norlund_number_scaled(n)
}

fn check_p_index(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Range(format!("p_n is defined for n ≥ 2, got {n}")));
    }
    Ok(())
}

/// `p_n` (`n ≥ 2`), the Gregory-type constants with
/// `k!·p_{k+1} = (−1)^(k−1)[B_k^(k) + k·B_{k−1}^(k−1)]`.
pub fn p_constant(n: usize) -> Result<Rational> {
    check_p_index(n)?;
    let k = n - 1;
    let v = norlund_number_scaled(k) + norlund_number_scaled(k - 1);
    Ok(if k % 2 == 0 { -v } else { v })
}

/// `p_{n+1} = (−1)^(n+1)/n! · Σ_r C(n,r)(2^(r+1)−1) B_{n−r}^(n+1)/(r+1)`,
/// an independent route through Nörlund polynomial values.
pub fn p_constant_via_norlund(n: usize) -> Result<Rational> {
    check_p_index(n)?;
    let m = n - 1;
    let alpha = Rational::from(m + 1);
    let mut acc = Rational::new();
    for r in 0..=m {
        let b = norlund_poly(m - r).eval(&alpha);
        let w = (Integer::from(1) << (r as u32 + 1)) - 1u32;
        acc += b * binomial(m, r) * w / Integer::from(r + 1);
    }
    acc /= factorial(m);
    Ok(if m % 2 == 0 { -acc } else { acc })
}

/// `p_{n+1} = (−1)^(n+1)/n! · Σ_k s(n,k)/(k+1)`, through Stirling numbers.
pub fn p_constant_via_stirling(n: usize) -> Result<Rational> {
    check_p_index(n)?;
    let m = n - 1;
    let mut acc = Rational::new();
    for k in 1..=m {
        acc += Rational::from((stirling1(m, k), Integer::from(k + 1)));
    }
    acc /= factorial(m);
    Ok(if m % 2 == 0 { -acc } else { acc })
}

/// Exact Horner evaluation.
pub fn poly_eval(poly: &RationalPolynomial, point: &Rational) -> Rational {
    poly.eval(point)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(0, 0), 1);
        assert_eq!(stirling2(4, 2), 7);
        assert_eq!(stirling2(3, 5), 0);
        assert_eq!(stirling1(3, 2), -3);
        assert_eq!(stirling1(4, 0), 0);
        assert_eq!(stirling1(0, 0), 1);
        for n in 0..12 {
            assert_eq!(stirling1(n, n), 1);
        }
        let row: Vec<_> = (0..=4).map(|k| stirling2(4, k)).collect();
        assert_eq!(row, [0, 1, 7, 6, 1]);
    }

    #[test]
    fn stirling2_explicit_sum() {
        for n in 0..15usize {
            for k in 0..=n + 2 {
                let mut sum = Integer::new();
                for j in 0..=k {
                    let t = binomial(k, j) * Integer::from(Integer::u_pow_u(j as u32, n as u32));
                    if (k - j) % 2 == 0 {
                        sum += t;
                    } else {
                        sum -= t;
                    }
                }
                assert_eq!(factorial(k) * stirling2(n, k), sum, "S({n},{k})");
            }
        }
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli_number(0), 1);
        assert_eq!(bernoulli_number(1), q(-1, 2));
        assert_eq!(bernoulli_number(3), 0);
        assert_eq!(bernoulli_number(2), q(1, 6));
        assert_eq!(bernoulli_number(12), q(-691, 2730));
        assert_eq!(bernoulli_poly(2, &q(0, 1)), q(1, 6));
        assert_eq!(bernoulli_poly(3, &q(1, 4)), q(3, 64));
        let a = q(5, 7);
        assert_eq!(bernoulli_poly(1, &a), a.clone() - q(1, 2));
    }

    #[test]
    fn bernoulli_multiplication_formula() {
        for n in 0..=10 {
            for m in 1..=5usize {
                for x in [q(0, 1), q(1, 3), q(-2, 5), q(7, 2)] {
                    let lhs = bernoulli_poly(n, &(x.clone() * Integer::from(m)));
                    let mut rhs = Rational::new();
                    for k in 0..m {
                        rhs += bernoulli_poly(n, &(x.clone() + q(k as i64, m as i64)));
                    }
                    rhs *= Rational::from((Integer::from(Integer::u_pow_u(m as u32, n as u32)), Integer::from(m)));
                    assert_eq!(lhs, rhs, "n={n} m={m} x={x}");
                }
            }
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(0), 0);
        assert_eq!(harmonic(3), q(11, 6));
        assert_eq!(harmonic_gen(2, 2), q(5, 4));
        assert_eq!(harmonic_gen(0, 3), 0);
    }

    #[test]
    fn norlund_examples() {
        assert_eq!(*norlund_poly(0), RationalPolynomial::one());
        assert_eq!(*norlund_poly(1), RationalPolynomial::linear(q(0, 1), q(-1, 2)));
        assert_eq!(
            *norlund_poly(2),
            RationalPolynomial::new(vec![q(0, 1), q(-1, 12), q(1, 4)])
        );
        assert_eq!(
            *norlund_poly(3),
            RationalPolynomial::new(vec![q(0, 1), q(0, 1), q(1, 8), q(-1, 8)])
        );
        for n in 0..40 {
            let p = norlund_poly(n);
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.leading(), pow_rational(&q(-1, 2), n));
            if n >= 1 {
                assert_eq!(p.coeff(0), 0);
            }
        }
    }

    fn pow_rational(r: &Rational, n: usize) -> Rational {
        (0..n).fold(Rational::from(1), |acc, _| acc * r)
    }

    #[test]
    fn norlund_order_one_is_bernoulli() {
        for n in 0..30 {
            assert_eq!(norlund_poly(n).eval(&q(1, 1)), bernoulli_number(n));
        }
    }

    #[test]
    fn gen_bernoulli_examples() {
        let x = q(3, 5);
        assert_eq!(gen_bernoulli_poly(0, &x), RationalPolynomial::one());
        assert_eq!(gen_bernoulli_poly(1, &q(0, 1)), *norlund_poly(1));
        assert_eq!(
            gen_bernoulli_poly(1, &q(1, 2)),
            RationalPolynomial::linear(q(1, 2), q(-1, 2))
        );
    }

    #[test]
    fn gen_bernoulli_reflection() {
        for n in 0..12 {
            for x in [q(1, 3), q(2, 1), q(-3, 4)] {
                let p = gen_bernoulli_poly(n, &x);
                for alpha in [q(1, 2), q(3, 1), q(-7, 3)] {
                    let refl = gen_bernoulli_poly(n, &(alpha.clone() - &x)).eval(&alpha);
                    let refl = if n % 2 == 0 { refl } else { -refl };
                    assert_eq!(p.eval(&alpha), refl, "n={n} x={x} α={alpha}");
                }
            }
        }
    }

    #[test]
    fn dalpha_examples() {
        assert!(norlund_poly_dalpha(0).is_zero());
        assert_eq!(*norlund_poly_dalpha(1), RationalPolynomial::constant(q(-1, 2)));
        assert_eq!(*norlund_poly_dalpha(2), RationalPolynomial::linear(q(-1, 12), q(1, 2)));
    }

    #[test]
    fn norlund_number_examples() {
        assert_eq!(norlund_number(0), 1);
        assert_eq!(norlund_number(1), q(-1, 2));
        assert_eq!(norlund_number(2), q(5, 6));
        assert_eq!(norlund_number(3), q(-9, 4));
        for n in 0..40usize {
            let v = norlund_number(n);
            assert_eq!(v, norlund_poly(n).eval(&Rational::from(n)));
            if n >= 1 {
                assert_eq!(v < 0, n % 2 == 1);
            }
        }
    }

    #[test]
    fn p_constant_examples() {
        assert_eq!(p_constant(2).unwrap(), q(1, 2));
        assert_eq!(p_constant(3).unwrap(), q(1, 12));
        assert_eq!(p_constant(4).unwrap(), q(1, 24));
        assert!(matches!(p_constant(1), Err(Error::Range(_))));
        for n in 2..25 {
            let p = p_constant(n).unwrap();
            assert_eq!(p, p_constant_via_norlund(n).unwrap(), "n={n}");
            assert_eq!(p, p_constant_via_stirling(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn poly_eval_examples() {
        assert_eq!(poly_eval(&RationalPolynomial::one(), &q(9, 4)), 1);
        assert_eq!(poly_eval(&norlund_poly(1), &q(7, 1)), q(-7, 2));
        assert_eq!(poly_eval(&norlund_poly(2), &q(1, 3)), 0);
    }

    #[test]
    fn zeta_coefficient_is_shifted_quotient() {
        for k in 1..15usize {
            let c = zeta_coefficient(k);
            for s in [q(1, 3), q(-5, 2), q(4, 1)] {
                let alpha = s.clone() + Integer::from(k - 1);
                let want = norlund_poly(k).eval(&alpha) / &alpha;
                assert_eq!(c.eval(&s), want);
            }
        }
    }

    #[test]
    fn rational_io() {
        assert_eq!(format_rational(&q(-9, 4)), "-9/4");
        assert_eq!(format_rational(&q(6, 3)), "2");
        assert_eq!(format_rational(&Rational::new()), "0");
        assert_eq!(parse_rational("-9/4").unwrap(), q(-9, 4));
        assert_eq!(parse_rational("0.75").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-3.5e-1").unwrap(), q(-7, 20));
        assert_eq!(parse_rational("12").unwrap(), 12);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }
}
