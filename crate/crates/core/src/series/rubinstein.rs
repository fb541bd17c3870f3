use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::exact::{self, RationalPolynomial};
use crate::precision::MPComplex;

/// `α_k(s) = (s−1)(−1)^k/k! · B_k^(s+k−1)/(s+k−1)` as an exact polynomial in
/// `s`, the coefficient of `t^k` in `(−ln(1−t)/t)^(s−1)`.
pub fn alpha_poly(k: usize) -> RationalPolynomial {
    if k == 0 {
        return RationalPolynomial::one();
    }
    let mut c = Rational::from((1, exact::factorial(k)));
    if k % 2 == 1 {
        c = -c;
    }
    exact::zeta_coefficient(k).mul_linear(&Rational::from(-1)).scale(&c)
}

/// `α_k(s)` at rational `s`.
pub fn alpha_coeff_exact(k: usize, s: &Rational) -> Rational {
    alpha_poly(k).eval(s)
}

/// `α_k'(s)` at rational `s`, from the derivative of [`alpha_poly`].
pub fn alpha_coeff_prime_exact(k: usize, s: &Rational) -> Rational {
    alpha_poly(k).derivative().eval(s)
}

fn eval_complex(poly: &RationalPolynomial, s: &MPComplex) -> MPComplex {
    let p = s.prec();
    let mut v = MPComplex::zero(p);
    for c in poly.coeffs().iter().rev() {
        v = (&v * s).add_real(&Float::with_val(p, c));
    }
    v
}

/// `α_k(s)` at complex `s`, at the precision of `s`.
pub fn alpha_coeff(k: usize, s: &MPComplex) -> MPComplex {
    eval_complex(&alpha_poly(k), s)
}

/// `α_k'(s)` at complex `s`, at the precision of `s`.
pub fn alpha_coeff_prime(k: usize, s: &MPComplex) -> MPComplex {
    eval_complex(&alpha_poly(k).derivative(), s)
}

/// `α_k'(s)` written out with `∂_α B_k^(α)` at `α = s+k−1`:
/// `(−1)^k/(k−1)! · B_k^(α)/α² + (−1)^k/k! · (s−1)/α · ∂_α B_k^(α)`.
pub fn alpha_coeff_prime_via_dalpha(k: usize, s: &Rational) -> Result<Rational> {
    if k == 0 {
        return Ok(Rational::new());
    }
    let alpha = Rational::from(s + (k as i64 - 1));
    if alpha == 0 {
        return Err(Error::Domain(format!("α = s+k−1 vanishes at k = {k}; use alpha_coeff_prime_exact")));
    }
    let b = exact::norlund_poly(k).eval(&alpha);
    let db = exact::norlund_poly_dalpha(k).eval(&alpha);
    let first = b / Rational::from(alpha.square_ref()) / exact::factorial(k - 1);
    let second = db * Rational::from(s - 1u32) / &alpha / exact::factorial(k);
    let v = first + second;
    Ok(if k % 2 == 1 { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Integer;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn sign(k: usize) -> i64 {
        if k % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn generating_function_low_orders() {
        // (−ln(1−t)/t)^(s−1) = 1 + (s−1)t/2 + (s−1)(3s+2)t²/24 + …
        assert_eq!(alpha_coeff_exact(1, &q(5)), q(2));
        assert_eq!(alpha_coeff_exact(2, &q(3)), Rational::from((2 * 11, 24)));
        assert_eq!(alpha_coeff_exact(0, &q(-7)), q(1));
        // s = 2: −ln(1−t)/t = Σ t^k/(k+1)
        for k in 0..12 {
            assert_eq!(alpha_coeff_exact(k, &q(2)), Rational::from((1, k as u64 + 1)));
        }
    }

    #[test]
    fn special_values() {
        for k in 0..=20usize {
            let want = Rational::from((sign(k), exact::factorial(k)));
            assert_eq!(alpha_coeff_exact(k, &q(-(k as i64))), want, "k={k}");
        }
        for m in 0..=5usize {
            let n = 2 * m + 2;
            let b = exact::bernoulli_number(n) / exact::factorial(n);
            assert_eq!(alpha_coeff_exact(n, &q(-(2 * m as i64) - 1)), b, "m={m}");
            let want = -Rational::from(&b * Integer::from(2 * m + 1));
            assert_eq!(alpha_coeff_exact(n, &q(-(2 * m as i64))), want, "m={m}");
        }
    }

    #[test]
    fn derivative_at_one() {
        for k in 1..=20usize {
            let want = exact::norlund_number(k) * sign(k) / (exact::factorial(k) * k as u64);
            assert_eq!(alpha_coeff_prime_exact(k, &q(1)), want, "k={k}");
            assert_eq!(alpha_coeff_prime_via_dalpha(k, &q(1)).unwrap(), want, "k={k}");
        }
        for k in 1..=10usize {
            for s in [Rational::from((1, 2)), q(3), q(-2) / 3u32] {
                assert_eq!(alpha_coeff_prime_via_dalpha(k, &s).unwrap(), alpha_coeff_prime_exact(k, &s));
            }
        }
        assert!(alpha_coeff_prime_via_dalpha(3, &q(-2)).is_err());
    }

    #[test]
    fn complex_evaluation() {
        let s = MPComplex::from_f64(128, 0.5, 1.0);
        let v = alpha_coeff(3, &s);
        let (re, im) = (v.re.to_f64(), v.im.to_f64());
        // α_3(s) = (s−1)(s+1)(s+2)/48
        let z = |a: f64, b: f64| (a, b);
        let mul = |x: (f64, f64), y: (f64, f64)| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        let w = mul(mul(z(-0.5, 1.0), z(1.5, 1.0)), z(2.5, 1.0));
        assert!((re - w.0 / 48.0).abs() < 1e-15 && (im - w.1 / 48.0).abs() < 1e-15);
        let d = alpha_coeff_prime(1, &s);
        assert!((d.re.to_f64() - 0.5).abs() < 1e-30 && d.im.is_zero());
    }
}
