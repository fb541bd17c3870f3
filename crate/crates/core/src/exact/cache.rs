use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rug::{Integer, Rational};

use super::norlund;
use super::poly::RationalPolynomial;

/// Default bound on memoized polynomial indices.
pub const DEFAULT_LIMIT: usize = 256;

#[derive(Clone)]
struct ScaledNorlund {
    value: Rational,
    numer: Integer,
    lcm: Integer,
}

type PolyTable = RwLock<HashMap<usize, Arc<RationalPolynomial>>>;

/// Memo tables for every exact sequence in the crate.
///
/// Sequences built by recurrence (Stirling rows, Bernoulli, harmonic and
/// Nörlund numbers) grow on demand. Polynomial tables keep indices up to
/// `limit`; larger indices are recomputed on each request. Readers share a
/// lock; a missing entry is computed outside any lock and inserted once, so a
/// cached value is always identical to a fresh one.
pub struct ExactCache {
    limit: usize,
    stirling1: RwLock<Vec<Arc<Vec<Integer>>>>,
    stirling2: RwLock<Vec<Arc<Vec<Integer>>>>,
    bernoulli: RwLock<Vec<Rational>>,
    harmonic: RwLock<Vec<Rational>>,
    norlund_scaled: RwLock<Vec<ScaledNorlund>>,
    norlund: PolyTable,
    dalpha: PolyTable,
    quotient: PolyTable,
    zeta_coeff: PolyTable,
}

impl Default for ExactCache {
    fn default() -> Self {
        Self::with_limit(DEFAULT_LIMIT)
    }
}

fn extend<T: Clone>(lock: &RwLock<Vec<T>>, n: usize, mut next: impl FnMut(&[T]) -> T) -> T {
    if let Some(v) = lock.read().unwrap().get(n) {
        return v.clone();
    }
    let mut table = lock.write().unwrap();
    while table.len() <= n {
        let v = next(&table);
        table.push(v);
    }
    table[n].clone()
}

impl ExactCache {
    pub fn with_limit(limit: usize) -> Self {
        ExactCache {
            limit,
            stirling1: RwLock::new(vec![Arc::new(vec![Integer::from(1)])]),
            stirling2: RwLock::new(vec![Arc::new(vec![Integer::from(1)])]),
            bernoulli: RwLock::new(vec![Rational::from(1)]),
            harmonic: RwLock::new(vec![Rational::new()]),
            norlund_scaled: RwLock::new(vec![ScaledNorlund {
                value: Rational::from(1),
                numer: Integer::from(1),
                lcm: Integer::from(1),
            }]),
            norlund: RwLock::default(),
            dalpha: RwLock::default(),
            quotient: RwLock::default(),
            zeta_coeff: RwLock::default(),
        }
    }

    /// The process-wide cache used by the free functions of [`crate::exact`].
    pub fn global() -> &'static ExactCache {
        static GLOBAL: OnceLock<ExactCache> = OnceLock::new();
        GLOBAL.get_or_init(ExactCache::default)
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn poly(
        &self,
        table: &PolyTable,
        n: usize,
        compute: impl FnOnce() -> RationalPolynomial,
    ) -> Arc<RationalPolynomial> {
        if let Some(p) = table.read().unwrap().get(&n) {
            return p.clone();
        }
        let p = Arc::new(compute());
        if n > self.limit {
            return p;
        }
        table.write().unwrap().entry(n).or_insert(p).clone()
    }

    /// Row `n` of the signed Stirling numbers of the first kind, `s(n, 0..=n)`.
    pub fn stirling1_row(&self, n: usize) -> Arc<Vec<Integer>> {
        extend(&self.stirling1, n, |rows| {
            let m = rows.len() - 1;
            let prev = &rows[m];
            let mut row = vec![Integer::new(); m + 2];
            for k in 1..=m + 1 {
                let mut v = prev[k - 1].clone();
                if k <= m {
                    v -= Integer::from(&prev[k] * m as u64);
                }
                row[k] = v;
            }
            Arc::new(row)
        })
    }

    /// Row `n` of the Stirling numbers of the second kind, `S(n, 0..=n)`.
    pub fn stirling2_row(&self, n: usize) -> Arc<Vec<Integer>> {
        extend(&self.stirling2, n, |rows| {
            let m = rows.len() - 1;
            let prev = &rows[m];
            let mut row = vec![Integer::new(); m + 2];
            for k in 1..=m + 1 {
                let mut v = prev[k - 1].clone();
                if k <= m {
                    v += Integer::from(&prev[k] * k as u64);
                }
                row[k] = v;
            }
            Arc::new(row)
        })
    }

    pub fn bernoulli(&self, n: usize) -> Rational {
        if n > 1 && n % 2 == 1 {
            return Rational::new();
        }
        extend(&self.bernoulli, n, |b| {
            let m = b.len();
            if m > 1 && m % 2 == 1 {
                return Rational::new();
            }
            let mut acc = Rational::new();
            for (k, bk) in b.iter().enumerate() {
                if *bk != 0 {
                    acc += Rational::from(bk * Integer::from(Integer::binomial_u(m as u32 + 1, k as u32)));
                }
            }
            -acc / Integer::from(m + 1)
        })
    }

    pub fn harmonic(&self, n: usize) -> Rational {
        extend(&self.harmonic, n, |h| {
            let m = h.len();
            &h[m - 1] + Rational::from((1, m as u64))
        })
    }

    /// `B_n^(n)/n!`, read off `z/((1+z)ln(1+z))` by inverting the series
    /// `(1+z)ln(1+z)/z = 1 + Σ_{j≥1} (−1)^(j+1) z^j/(j(j+1))`.
    ///
    /// Kept as integers `N_m = B_m^(m)·lcm(1..m+1)` so that each step is a
    /// plain integer sum over the denominator `(n+1)!·lcm(1..n+1)`.
    pub fn norlund_number_scaled(&self, n: usize) -> Rational {
        extend(&self.norlund_scaled, n, |b| {
            let n = b.len();
            let lcm = b[n - 1].lcm.clone().lcm(&Integer::from(n + 1));
            let mut sum = Integer::new();
            // binom = C(n+1, j+1), fact = (j−1)!
            let mut binom = Integer::from((n + 1) * n / 2);
            let mut fact = Integer::from(1);
            for j in 1..=n {
                let prev = &b[n - j];
                let mut t = Integer::from(&binom * &fact);
                t *= &prev.numer;
                t *= Integer::from(lcm.div_exact_ref(&prev.lcm));
                if j % 2 == 1 {
                    sum -= t;
                } else {
                    sum += t;
                }
                binom *= (n - j) as u64;
                binom = binom.div_exact_u((j + 2) as u32);
                fact *= j as u64;
            }
            let numer = sum.div_exact_u((n + 1) as u32);
            let denom = &lcm * Integer::from(Integer::factorial(n as u32));
            ScaledNorlund { value: Rational::from((numer.clone(), denom)), numer, lcm }
        })
        .value
    }

    pub fn norlund_poly(&self, n: usize) -> Arc<RationalPolynomial> {
        self.poly(&self.norlund, n, || {
            let rows: Vec<_> = (n..=2 * n).map(|m| self.stirling2_row(m)).collect();
            norlund::construct(n, &rows)
        })
    }

    pub fn norlund_poly_dalpha(&self, n: usize) -> Arc<RationalPolynomial> {
        if n == 0 {
            return Arc::new(RationalPolynomial::zero());
        }
        self.poly(&self.dalpha, n, || {
            let lower: Vec<_> = (0..n).map(|j| self.norlund_poly(j)).collect();
            let bern: Vec<_> = (0..=n).map(|j| self.bernoulli(j)).collect();
            norlund::dalpha_recursion(n, &lower, &bern)
        })
    }

    /// `B_n^(α)/α` for `n ≥ 1`.
    pub fn norlund_quotient(&self, n: usize) -> Arc<RationalPolynomial> {
        assert!(n >= 1, "B_0^(α)/α is not a polynomial");
        self.poly(&self.quotient, n, || {
            self.norlund_poly(n)
                .div_by_x()
                .expect("constant term of B_n^(α) vanishes for n ≥ 1")
        })
    }

    /// `q_k(s) = B_k^(s+k−1)/(s+k−1)` as a polynomial in `s`, for `k ≥ 1`.
    pub fn zeta_coefficient(&self, k: usize) -> Arc<RationalPolynomial> {
        self.poly(&self.zeta_coeff, k, || {
            // past the limit nothing is stored, so build B_k^(α) only once
            let q = if k > self.limit {
                Arc::new(self.norlund_poly(k).div_by_x().expect("constant term of B_k^(α) vanishes for k ≥ 1"))
            } else {
                self.norlund_quotient(k)
            };
            q.taylor_shift_int(k as i64 - 1)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beyond_limit_is_not_stored_but_identical() {
        let small = ExactCache::with_limit(4);
        let a = small.norlund_poly(6);
        let b = small.norlund_poly(6);
        assert!(!Arc::ptr_eq(&a, &b));
        assert_eq!(*a, *b);
        let c = small.norlund_poly(3);
        assert!(Arc::ptr_eq(&c, &small.norlund_poly(3)));
        assert_eq!(*ExactCache::global().norlund_poly(6), *a);
    }

    #[test]
    fn concurrent_fill_is_consistent() {
        let cache = Arc::new(ExactCache::with_limit(64));
        let handles: Vec<_> = (0..8)
            .map(|t| {
                let c = cache.clone();
                std::thread::spawn(move || {
                    (0..30).map(|n| c.norlund_poly((n * 7 + t) % 30)).collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for p in h.join().unwrap() {
                let n = p.degree().unwrap();
                assert_eq!(*p, *cache.norlund_poly(n));
            }
        }
    }
}
