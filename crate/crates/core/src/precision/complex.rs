use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};

/// Complex number over two MPFR floats, rounding to nearest.
///
/// Binary operations produce the larger of the two operand precisions.
#[derive(Clone, Debug, PartialEq)]
pub struct MPComplex {
    pub re: Float,
    pub im: Float,
}

impl MPComplex {
    pub fn new(re: Float, im: Float) -> Self {
        MPComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(Float::new(prec), Float::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::from_f64(prec, 1.0, 0.0)
    }

    pub fn i(prec: u32) -> Self {
        Self::from_f64(prec, 0.0, 1.0)
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Self::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn from_i64(prec: u32, n: i64) -> Self {
        Self::new(Float::with_val(prec, n), Float::new(prec))
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        Self::new(re, im)
    }

    pub fn from_rational(prec: u32, q: &Rational) -> Self {
        Self::from_real(Float::with_val(prec, q))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Rounded copy at `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::new(Float::with_val(prec, &self.re), Float::with_val(prec, &self.im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// `Some(n)` when the value is exactly the integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        if !self.im.is_zero() || !self.re.is_integer() {
            return None;
        }
        self.re.to_integer().and_then(|i| i.to_i64())
    }

    pub fn is_nonpositive_integer(&self) -> bool {
        self.as_integer().is_some_and(|n| n <= 0)
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    /// `log2 |z|`; `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        let a = self.abs();
        if a.is_zero() {
            return f64::NEG_INFINITY;
        }
        let (m, e) = a.to_f64_exp();
        m.log2() + e as f64
    }

    pub fn arg(&self) -> Float {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), Float::with_val(self.im.prec(), -&self.im))
    }

    pub fn sqr(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let d = self.norm_sqr();
        Self::new(
            Float::with_val(p, &self.re / &d),
            Float::with_val(p, -Float::with_val(p, &self.im / &d)),
        )
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let p = self.prec();
        Self::new(Float::with_val(p, self.abs().ln_ref()), self.arg())
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let r = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        Self::new(Float::with_val(p, &r * &c), Float::with_val(p, &r * &s))
    }

    /// `e^z − 1` without cancellation for small `|z|`.
    pub fn exp_m1(&self) -> Self {
        let p = self.prec();
        let em1 = Float::with_val(p, self.re.exp_m1_ref());
        let er = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        let half = Float::with_val(p, &self.im / 2u32);
        let sh = Float::with_val(p, half.sin_ref());
        // e^x cos y − 1 = expm1(x) cos y − 2 sin²(y/2)
        let re = Float::with_val(p, &em1 * &c) - Float::with_val(p, sh.square_ref()) * 2u32;
        Self::new(re, Float::with_val(p, &er * &s))
    }

    /// Principal power `z^w = exp(w ln z)`, with `0^w = 0` for `Re w > 0`.
    pub fn pow(&self, w: &MPComplex) -> Self {
        let p = self.prec().max(w.prec());
        if self.is_zero() {
            if w.is_zero() {
                return Self::one(p);
            }
            return Self::zero(p);
        }
        if w.is_real() && self.is_real() && self.re.is_sign_positive() {
            return Self::from_real(Float::with_val(p, (&self.re).pow(&w.re)));
        }
        (w * &self.with_prec(p).ln()).exp()
    }

    pub fn powi(&self, n: i64) -> Self {
        let p = self.prec();
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one(p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = base.sqr();
            e >>= 1;
        }
        acc
    }

    pub fn add_f64(&self, x: f64) -> Self {
        Self::new(Float::with_val(self.re.prec(), &self.re + x), self.im.clone())
    }

    pub fn add_i64(&self, n: i64) -> Self {
        Self::new(Float::with_val(self.re.prec(), &self.re + n), self.im.clone())
    }

    pub fn mul_i64(&self, n: i64) -> Self {
        let p = self.prec();
        Self::new(Float::with_val(p, &self.re * n), Float::with_val(p, &self.im * n))
    }

    pub fn div_i64(&self, n: i64) -> Self {
        let p = self.prec();
        Self::new(Float::with_val(p, &self.re / n), Float::with_val(p, &self.im / n))
    }

    pub fn mul_real(&self, x: &Float) -> Self {
        let p = self.prec().max(x.prec());
        Self::new(Float::with_val(p, &self.re * x), Float::with_val(p, &self.im * x))
    }

    pub fn div_real(&self, x: &Float) -> Self {
        let p = self.prec().max(x.prec());
        Self::new(Float::with_val(p, &self.re / x), Float::with_val(p, &self.im / x))
    }

    pub fn add_real(&self, x: &Float) -> Self {
        let p = self.prec().max(x.prec());
        Self::new(Float::with_val(p, &self.re + x), Float::with_val(p, &self.im))
    }

    /// `e^(iπt)` for real `t`.
    /// Exact at integers and half-integers.
    pub fn exp_i_pi(t: &Float) -> Self {
        let p = t.prec();
        if t.is_finite() {
            // remainder is exact and lies in [−1, 1]
            let r = Float::with_val(p, t).remainder(&Float::with_val(p, 2));
            let twice = Float::with_val(p, &r * 2u32);
            if twice.is_integer() {
                let (c, s) = match twice.to_i32_saturating().unwrap_or(0) {
                    0 => (1, 0),
                    1 => (0, 1),
                    -1 => (0, -1),
                    _ => (-1, 0),
                };
                return Self::new(Float::with_val(p, c), Float::with_val(p, s));
            }
            let x = Float::with_val(p, Constant::Pi) * r;
            let (s, c) = x.sin_cos(Float::new(p));
            return Self::new(c, s);
        }
        let x = Float::with_val(p, Constant::Pi) * t;
        let (s, c) = x.sin_cos(Float::new(p));
        Self::new(c, s)
    }

    /// Decimal rendering `a`, `a+bi` or `a-bi` with `digits` significant
    /// digits per component.
    pub fn to_decimal(&self, digits: usize) -> String {
        let re = format_float(&self.re, digits);
        if self.im.is_zero() {
            return re;
        }
        let im = format_float(&self.im, digits);
        if im.starts_with('-') {
            format!("{re}{im}i")
        } else {
            format!("{re}+{im}i")
        }
    }

    /// Parses `a`, `bi`, `a+bi` or `a-bi` with decimal components.
    pub fn parse(s: &str, prec: u32) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidArgument(format!("not a real or complex literal: {s:?}"));
        let parse_real = |x: &str| -> Result<Float> {
            let v = Float::parse(x).map_err(|_| bad())?;
            Ok(Float::with_val(prec, v))
        };
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::from_real(parse_real(&t)?));
        };
        // split at the last sign that is not a leading sign or an exponent sign
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
        let unit = |x: &str| -> Result<Float> {
            match x {
                "" | "+" => Ok(Float::with_val(prec, 1)),
                "-" => Ok(Float::with_val(prec, -1)),
                _ => parse_real(x),
            }
        };
        match split {
            Some(j) => Ok(Self::new(parse_real(&body[..j])?, unit(&body[j..])?)),
            None => Ok(Self::new(Float::new(prec), unit(body)?)),
        }
    }
}

/// Scientific decimal rendering that `Float::parse` reads back.
pub fn format_float(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits))
}

impl fmt::Display for MPComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or_else(|| (self.prec() as f64 * std::f64::consts::LOG10_2) as usize + 1);
        write!(f, "{}", self.to_decimal(digits))
    }
}

impl Add for &MPComplex {
    type Output = MPComplex;
    fn add(self, rhs: &MPComplex) -> MPComplex {
        let p = self.prec().max(rhs.prec());
        MPComplex::new(Float::with_val(p, &self.re + &rhs.re), Float::with_val(p, &self.im + &rhs.im))
    }
}

impl Sub for &MPComplex {
    type Output = MPComplex;
    fn sub(self, rhs: &MPComplex) -> MPComplex {
        let p = self.prec().max(rhs.prec());
        MPComplex::new(Float::with_val(p, &self.re - &rhs.re), Float::with_val(p, &self.im - &rhs.im))
    }
}

impl Mul for &MPComplex {
    type Output = MPComplex;
    fn mul(self, rhs: &MPComplex) -> MPComplex {
        let p = self.prec().max(rhs.prec());
        if self.im.is_zero() && rhs.im.is_zero() {
            return MPComplex::from_real(Float::with_val(p, &self.re * &rhs.re));
        }
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        MPComplex::new(ac - bd, ad + bc)
    }
}

impl Div for &MPComplex {
    type Output = MPComplex;
    fn div(self, rhs: &MPComplex) -> MPComplex {
        let p = self.prec().max(rhs.prec());
        if rhs.im.is_zero() {
            return MPComplex::new(
                Float::with_val(p, &self.re / &rhs.re),
                Float::with_val(p, &self.im / &rhs.re),
            );
        }
        let d = rhs.norm_sqr();
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        MPComplex::new((ac + bd) / &d, (bc - ad) / &d)
    }
}

impl Neg for &MPComplex {
    type Output = MPComplex;
    fn neg(self) -> MPComplex {
        MPComplex::new(Float::with_val(self.re.prec(), -&self.re), Float::with_val(self.im.prec(), -&self.im))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MPComplex {
            type Output = MPComplex;
            fn $m(self, rhs: MPComplex) -> MPComplex {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MPComplex> for MPComplex {
            type Output = MPComplex;
            fn $m(self, rhs: &MPComplex) -> MPComplex {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for MPComplex {
    type Output = MPComplex;
    fn neg(self) -> MPComplex {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    fn close(a: &MPComplex, b: &MPComplex, bits: i32) -> bool {
        (a - b).log2_abs() <= b.log2_abs().max(0.0) - bits as f64
    }

    #[test]
    fn field_ops() {
        let a = MPComplex::from_f64(P, 1.5, -2.0);
        let b = MPComplex::from_f64(P, -0.25, 3.0);
        let prod = &a * &b;
        assert_eq!(prod, MPComplex::from_f64(P, 5.625, 5.0));
        assert!(close(&(&prod / &b), &a, 120));
        assert!(close(&(&a * &a.recip()), &MPComplex::one(P), 120));
        assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn transcendental() {
        let z = MPComplex::from_f64(P, 0.3, 1.7);
        assert!(close(&z.ln().exp(), &z, 120));
        let w = MPComplex::from_f64(P, -1.25, 0.5);
        let direct = (&w * &z.ln()).exp();
        assert!(close(&z.pow(&w), &direct, 120));
        assert!(close(&z.powi(-3), &z.pow(&MPComplex::from_i64(P, -3)), 118));
        let tiny = MPComplex::from_f64(P, 1e-30, -3e-31);
        let em1 = tiny.exp_m1();
        assert!(close(&em1, &tiny, 90));
        let moderate = MPComplex::from_f64(P, 0.7, -2.1);
        assert!(close(&moderate.exp_m1(), &moderate.exp().add_i64(-1), 120));
    }

    #[test]
    fn exp_i_pi_is_root_of_unity() {
        let z = MPComplex::exp_i_pi(&Float::with_val(P, 0.5));
        assert!(close(&z, &MPComplex::i(P), 120));
    }

    #[test]
    fn parse_and_render() {
        let z = MPComplex::parse("0.5+14.25i", 64).unwrap();
        assert_eq!(z, MPComplex::from_f64(64, 0.5, 14.25));
        assert_eq!(MPComplex::parse("-2", 64).unwrap(), MPComplex::from_f64(64, -2.0, 0.0));
        assert_eq!(MPComplex::parse("3-i", 64).unwrap(), MPComplex::from_f64(64, 3.0, -1.0));
        assert_eq!(MPComplex::parse("-2.5e-1i", 64).unwrap(), MPComplex::from_f64(64, 0.0, -0.25));
        assert_eq!(MPComplex::parse("1.5625e-2+2E+1i", 64).unwrap(), MPComplex::from_f64(64, 1.5625e-2, 20.0));
        assert!(MPComplex::parse("2+", 64).is_err());
        assert!(MPComplex::parse("", 64).is_err());
        assert!(MPComplex::parse("abc", 64).is_err());
        let w = MPComplex::from_f64(P, -0.1, 1.0 / 3.0);
        let text = w.to_decimal(40);
        assert!(close(&MPComplex::parse(&text, P).unwrap(), &w, 120));
    }

    #[test]
    fn integer_detection() {
        assert_eq!(MPComplex::from_f64(P, -3.0, 0.0).as_integer(), Some(-3));
        assert!(MPComplex::from_f64(P, 0.0, 0.0).is_nonpositive_integer());
        assert!(!MPComplex::from_f64(P, -3.0, 1e-30).is_nonpositive_integer());
        assert!(!MPComplex::from_f64(P, 2.5, 0.0).is_nonpositive_integer());
    }
}
