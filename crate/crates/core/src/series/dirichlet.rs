use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::zeta::regular_at;
use super::{guarded, Pass, SeriesEvaluation};
use crate::error::{Error, Result};
use crate::exact;
use crate::precision::{pi, MPComplex, PrecisionContext};

/// A Dirichlet character given by its table `χ(1), …, χ(m)`.
#[derive(Clone, Debug)]
pub struct DirichletCharacter {
    modulus: usize,
    values: Vec<MPComplex>,
    principal: bool,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl DirichletCharacter {
    /// Checks that the table vanishes exactly off the units, takes values of
    /// modulus one on them and is multiplicative there.
    pub fn new(modulus: usize, values: Vec<MPComplex>) -> Result<Self> {
        if modulus == 0 || values.len() != modulus {
            return Err(Error::InvalidArgument(format!(
                "a character mod {modulus} needs {modulus} values, got {}",
                values.len()
            )));
        }
        let p = values.iter().map(|v| v.prec()).min().unwrap_or(64);
        let tol = -(p as f64) + 8.0;
        let unit = |k: usize| gcd(k % modulus, modulus) == 1 || modulus == 1;
        for (i, v) in values.iter().enumerate() {
            let k = i + 1;
            if unit(k) {
                if (v.abs() - 1u32).abs() > Float::with_val(53, tol).exp2() {
                    return Err(Error::InvalidArgument(format!("χ({k}) = {v} is not a root of unity")));
                }
            } else if !v.is_zero() {
                return Err(Error::InvalidArgument(format!("χ({k}) must vanish since gcd({k}, {modulus}) > 1")));
            }
        }
        let at = |k: usize| &values[(k + modulus - 1) % modulus];
        for a in 1..=modulus {
            for b in a..=modulus {
                if !(unit(a) && unit(b)) {
                    continue;
                }
                let d = &(at(a) * at(b)) - at(a * b % modulus);
                if d.log2_abs() > tol {
                    return Err(Error::InvalidArgument(format!("χ is not multiplicative at {a}·{b} mod {modulus}")));
                }
            }
        }
        let one = MPComplex::one(p);
        let principal = (1..=modulus).filter(|&k| unit(k)).all(|k| (at(k) - &one).log2_abs() <= tol);
        Ok(DirichletCharacter { modulus, values, principal })
    }

    /// A real-valued character from integers in `{−1, 0, 1}`.
    pub fn from_integers(modulus: usize, values: &[i64]) -> Result<Self> {
        Self::new(modulus, values.iter().map(|&v| MPComplex::from_i64(64, v)).collect())
    }

    /// The principal character mod `m`.
    pub fn principal(modulus: usize) -> Result<Self> {
        let vals: Vec<i64> = (1..=modulus).map(|k| i64::from(gcd(k % modulus.max(1), modulus) == 1 || modulus == 1)).collect();
        Self::from_integers(modulus, &vals)
    }

    /// The nonprincipal character mod 4.
    pub fn mod4() -> Self {
        Self::from_integers(4, &[1, 0, -1, 0]).expect("valid character")
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.principal
    }

    /// `χ(k)` for any integer `k ≥ 0`.
    pub fn value(&self, k: usize) -> &MPComplex {
        &self.values[(k + self.modulus - 1) % self.modulus]
    }
}

/// `L(s,χ) = m^(−s) Σ_k χ(k) ζ(s, k/m)`.
///
/// The pole parts `χ(k)/(s−1)` are combined before summing, so a
/// nonprincipal character is regular at `s = 1`.
pub fn dirichlet_l(s: &MPComplex, chi: &DirichletCharacter, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    if chi.principal && s.is_real() && s.re == 1 {
        return Err(Error::Pole("L(s,χ) of a principal character has a pole at s = 1".into()));
    }
    let m = chi.modulus;
    guarded(ctx, |p| {
        let sp = s.with_prec(p);
        let mut sum = MPComplex::zero(p);
        let mut chi_sum = MPComplex::zero(p);
        let mut scale = f64::NEG_INFINITY;
        let mut terms = 0;
        let mut converged = true;
        let mut tail = Float::new(64);
        for k in 1..=m {
            let c = chi.value(k).with_prec(p);
            if c.is_zero() {
                continue;
            }
            let a = MPComplex::from_rational(p, &Rational::from((k as u64, m as u64)));
            let (f, sc, pass) = regular_at(&sp, &a, p, ctx)?;
            scale = scale.max(sc);
            terms += pass.terms;
            converged &= pass.converged;
            tail += &pass.tail;
            sum = &sum + &(&c * &f);
            chi_sum = &chi_sum + &c;
        }
        if !chi_sum.is_zero() && chi.principal {
            let pole = &chi_sum / &sp.add_i64(-1);
            scale = scale.max(pole.log2_abs());
            sum = &sum + &pole;
        }
        let ms = MPComplex::from_i64(p, m as i64).pow(&-&sp);
        let v = &sum * &ms;
        let mut pass = Pass { terms, tail, converged };
        pass.tail *= ms.abs();
        Ok((v, scale + ms.log2_abs(), pass))
    })
}

/// `L(s) = Σ (−1)^n (2n+1)^(−s)`, the L-function of the character mod 4.
pub fn dirichlet_beta(s: &MPComplex, ctx: &PrecisionContext) -> Result<SeriesEvaluation> {
    dirichlet_l(s, &DirichletCharacter::mod4(), ctx)
}

/// `L(2m+1) = (−1)^(m+1) (2π)^(2m+1)/(2(2m+1)!) · B_{2m+1}(1/4)` for the
/// character mod 4, with the Bernoulli value exact.
pub fn beta_odd_value(m: usize, ctx: &PrecisionContext) -> Float {
    let p = ctx.working_bits();
    let n = 2 * m + 1;
    let b = exact::bernoulli_poly(n, &Rational::from((1, 4)));
    let mut c = b / (Integer::from(2) * exact::factorial(n));
    if m % 2 == 0 {
        c = -c;
    }
    let two_pi = Float::with_val(p, pi(p) * 2u32);
    let v = Float::with_val(p, two_pi.pow(n as u32)) * Float::with_val(p, &c);
    Float::with_val(ctx.working_bits(), v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::hurwitz_zeta_oracle;

    fn c(x: f64) -> MPComplex {
        MPComplex::from_f64(192, x, 0.0)
    }

    fn rel(a: &MPComplex, b: &MPComplex) -> f64 {
        (a - b).log2_abs() - b.log2_abs()
    }

    #[test]
    fn beta_special_values() {
        let ctx = PrecisionContext::default();
        let pi = pi(192);
        let quarter = MPComplex::from_real(Float::with_val(192, &pi / 4u32));
        assert!(rel(&MPComplex::from_real(beta_odd_value(0, &ctx)), &quarter) < -180.0);
        let cube = MPComplex::from_real(Float::with_val(192, pi.clone().pow(3u32) / 32u32));
        assert!(rel(&MPComplex::from_real(beta_odd_value(1, &ctx)), &cube) < -180.0);
        let v = dirichlet_beta(&c(1.0), &ctx).unwrap();
        assert!(rel(&v.value, &quarter) < -120.0);
        let v = dirichlet_beta(&c(3.0), &ctx).unwrap();
        assert!(rel(&v.value, &cube) < -120.0);
        for m in 0..=4 {
            let v = dirichlet_beta(&c((2 * m + 1) as f64), &ctx).unwrap();
            let want = MPComplex::from_real(beta_odd_value(m, &ctx));
            assert!(rel(&v.value, &want) < -120.0, "m={m}");
        }
    }

    #[test]
    fn catalan() {
        let ctx = PrecisionContext::default();
        let v = dirichlet_beta(&c(2.0), &ctx).unwrap();
        assert!((v.value.re.to_f64() - 0.915_965_594_177_219).abs() < 1e-15);
        let q1 = hurwitz_zeta_oracle(&c(2.0), &Float::with_val(192, 0.25), &ctx).unwrap();
        let q3 = hurwitz_zeta_oracle(&c(2.0), &Float::with_val(192, 0.75), &ctx).unwrap();
        let want = (&q1 - &q3).div_i64(16);
        assert!(rel(&v.value, &want) < -120.0);
    }

    #[test]
    fn principal_character_gives_zeta_factor() {
        // principal mod 3: L(s) = (1 − 3^(−s)) ζ(s)
        let ctx = PrecisionContext::default();
        let chi = DirichletCharacter::principal(3).unwrap();
        assert!(chi.is_principal());
        let s = MPComplex::from_f64(192, 0.5, 4.0);
        let v = dirichlet_l(&s, &chi, &ctx).unwrap();
        let z = super::super::riemann_zeta(&s, &ctx).unwrap().value;
        let f = &MPComplex::one(192) - &MPComplex::from_i64(192, 3).pow(&-&s);
        assert!(rel(&v.value, &(&z * &f)) < -118.0);
        assert!(matches!(dirichlet_l(&c(1.0), &chi, &ctx), Err(Error::Pole(_))));
    }

    #[test]
    fn complex_character_mod5() {
        // χ(2) = i generates the characters mod 5; L(1,χ) agrees with the
        // direct alternating form at s = 2 via the oracle
        let ctx = PrecisionContext::default();
        let i = MPComplex::i(192);
        let one = MPComplex::one(192);
        let vals = vec![one.clone(), i.clone(), -i.clone(), -one.clone(), MPComplex::zero(192)];
        let chi = DirichletCharacter::new(5, vals).unwrap();
        assert!(!chi.is_principal());
        let s = c(2.0);
        let v = dirichlet_l(&s, &chi, &ctx).unwrap();
        let mut want = MPComplex::zero(192);
        for k in 1..=4 {
            let z = hurwitz_zeta_oracle(&s, &Float::with_val(192, &Rational::from((k as u32, 5u32))), &ctx).unwrap();
            want = &want + &(chi.value(k) * &z);
        }
        want = want.div_i64(25);
        assert!(rel(&v.value, &want) < -118.0);
        assert!(dirichlet_l(&c(1.0), &chi, &ctx).unwrap().value.is_finite());
    }

    #[test]
    fn invalid_tables() {
        assert!(DirichletCharacter::from_integers(4, &[1, 1, -1, 0]).is_err());
        assert!(DirichletCharacter::from_integers(5, &[1, -1, 1, -1, 0]).is_err());
        assert!(DirichletCharacter::from_integers(3, &[1, 2, 0]).is_err());
        assert!(DirichletCharacter::from_integers(3, &[1, -1]).is_err());
        assert!(DirichletCharacter::from_integers(5, &[1, -1, -1, 1, 0]).is_ok());
    }
}
