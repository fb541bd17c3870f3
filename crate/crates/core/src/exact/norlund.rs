use std::sync::Arc;

use rug::integer::Order;
use rug::{Integer, Rational};

use super::poly::RationalPolynomial;

fn factorial(n: usize) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

/// Nörlund polynomial `B_n^(α)` from the explicit Stirling sum
///
/// `B_n^(α) = Σ_k (−1)^k n! S(n+k,k)/((n+k)!(n−k)!) · Π_{j≠k}(α+j)`,
///
/// accumulated over the integer common denominator `(2n)!·n!`.
/// `s2_rows[i]` must hold row `n+i` of the Stirling numbers of the second kind.
///
/// With `Π_j(α+j) = Σ_j p_j α^j`, the coefficient of `α^i` in
/// `Σ_k w_k Π_{j≠k}(α+j)` is `Σ_d p_{i+1+d} M_d` where `M_d = Σ_k w_k (−k)^d`,
/// a single convolution.
pub(crate) fn construct(n: usize, s2_rows: &[Arc<Vec<Integer>>]) -> RationalPolynomial {
    if n == 0 {
        return RationalPolynomial::one();
    }
    let n_fact = factorial(n);
    let two_n_fact = factorial(2 * n);
    let full = rising(n + 1);
    let mut moments = vec![Integer::new(); n + 1];
    for k in 0..=n {
        let s = &s2_rows[k][k];
        if *s == 0 {
            continue;
        }
        let mut w = Integer::from(&n_fact * s);
        w *= Integer::from(two_n_fact.div_exact_ref(&factorial(n + k)));
        w *= Integer::from(n_fact.div_exact_ref(&factorial(n - k)));
        if k % 2 == 1 {
            w = -w;
        }
        for m in moments.iter_mut() {
            *m += &w;
            w *= k as u64;
            w = -w;
        }
    }
    // acc_i = (rev * M)_{n−i} with rev_m = p_{n+1−m}
    let rev: Vec<Integer> = (0..=n).map(|m| full[n + 1 - m].clone()).collect();
    let conv = convolve(&rev, &moments, n + 1);
    let denom = Integer::from(&two_n_fact * &n_fact);
    RationalPolynomial::new((0..=n).map(|i| Rational::from((conv[n - i].clone(), denom.clone()))).collect())
}

/// First `len` coefficients of the product of `a ≥ 0` and a signed `b`,
/// by packing each into one large integer.
fn convolve(a: &[Integer], b: &[Integer], len: usize) -> Vec<Integer> {
    let (pos, neg): (Vec<Integer>, Vec<Integer>) = b
        .iter()
        .map(|x| if *x >= 0 { (x.clone(), Integer::new()) } else { (Integer::new(), Integer::from(-x)) })
        .unzip();
    let bits = |v: &[Integer]| v.iter().map(|x| x.significant_bits()).max().unwrap_or(0);
    let slot_bits = bits(a) + bits(b) + usize::BITS - a.len().min(b.len()).leading_zeros() + 1;
    let words = slot_bits.div_ceil(64) as usize;
    let pack = |v: &[Integer]| {
        let mut digits = vec![0u64; v.len() * words];
        for (i, x) in v.iter().enumerate() {
            let d = x.to_digits::<u64>(Order::Lsf);
            digits[i * words..i * words + d.len()].copy_from_slice(&d);
        }
        Integer::from_digits(&digits, Order::Lsf)
    };
    let unpack = |x: Integer| {
        let digits = x.to_digits::<u64>(Order::Lsf);
        (0..len)
            .map(|i| {
                let lo = (i * words).min(digits.len());
                let hi = ((i + 1) * words).min(digits.len());
                Integer::from_digits(&digits[lo..hi], Order::Lsf)
            })
            .collect::<Vec<_>>()
    };
    let pa = pack(a);
    let plus = unpack(Integer::from(&pa * &pack(&pos)));
    let minus = unpack(pa * pack(&neg));
    plus.into_iter().zip(minus).map(|(p, m)| p - m).collect()
}

/// Coefficients of `(α)_m = α(α+1)…(α+m−1)`, ascending.
fn rising(m: usize) -> Vec<Integer> {
    let mut p = vec![Integer::from(1)];
    for j in 0..m {
        let mut next = vec![Integer::new(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] += Integer::from(c * j as u64);
        }
        p = next;
    }
    p
}

/// `∂_α B_n^(α) = −(n/2)B_{n−1}^(α) − Σ_{j≤n−2} C(n,j) B_{n−j}/(n−j) · B_j^(α)`.
/// `lower[j]` is `B_j^(α)` for `j < n`; `bern[j]` the Bernoulli numbers.
pub(crate) fn dalpha_recursion(
    n: usize,
    lower: &[Arc<RationalPolynomial>],
    bern: &[Rational],
) -> RationalPolynomial {
    let mut d = lower[n - 1].scale(&Rational::from((-(n as i64), 2)));
    for j in 0..n.saturating_sub(1) {
        let b = &bern[n - j];
        if *b == 0 {
            continue;
        }
        let c = Rational::from(b * Integer::from(Integer::binomial_u(n as u32, j as u32)))
            / Integer::from(n - j);
        d = &d - &lower[j].scale(&c);
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_convolution() {
        let v = |xs: &[i64]| xs.iter().map(|&x| Integer::from(x)).collect::<Vec<_>>();
        // (1 + 2x + 3x²)(5 − 4x + 10¹⁵x²)
        let c = convolve(&v(&[1, 2, 3]), &v(&[5, -4, 1_000_000_000_000_000]), 5);
        assert_eq!(c, v(&[5, 6, 1_000_000_000_000_007, 1_999_999_999_999_988, 3_000_000_000_000_000]));
    }
}
