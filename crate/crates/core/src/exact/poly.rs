use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Integer, Rational};

use super::format_rational;

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree. The highest stored coefficient is never zero, so the zero
/// polynomial has no coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::from(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `c0 + c1·α`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::new(vec![c0, c1])
    }

    /// The monomial `α`.
    pub fn x() -> Self {
        Self::linear(Rational::new(), Rational::from(1))
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Rational::from(c * Integer::from(i)))
            .collect();
        Self::new(coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::new());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(Rational::from(c / Integer::from(i + 1)));
        }
        Self::new(coeffs)
    }

    /// `∫_lo^hi p(α) dα`.
    pub fn definite_integral(&self, lo: &Rational, hi: &Rational) -> Rational {
        let p = self.integral();
        p.eval(hi) - p.eval(lo)
    }

    /// `p(α)/α`, defined only when the constant term vanishes.
    pub fn div_by_x(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c) if *c == 0 => Some(Self::new(self.coeffs[1..].to_vec())),
            Some(_) => None,
        }
    }

    /// `p(α)·α^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::new(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| Rational::from(x * c)).collect())
    }

    /// `p(α)·(α + c)`.
    pub fn mul_linear(&self, c: &Rational) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len();
        let mut out = vec![Rational::new(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] += Rational::from(a * c);
        }
        Self::new(out)
    }

    /// `p(α + c)`, by repeated synthetic division.
    pub fn taylor_shift(&self, c: &Rational) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = Rational::from(&a[j + 1] * c);
                a[j] += t;
            }
        }
        Self::new(a)
    }

    /// `p(α + c)` for integer `c`, shifting integer numerators over a common
    /// denominator.
    pub fn taylor_shift_int(&self, c: i64) -> Self {
        let denom = self
            .coeffs
            .iter()
            .fold(Integer::from(1), |acc, r| acc.lcm(r.denom()));
        let mut a: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|r| r.numer() * Integer::from(denom.div_exact_ref(r.denom())))
            .collect();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = Integer::from(&a[j + 1] * c);
                a[j] += t;
            }
        }
        Self::new(a.into_iter().map(|x| Rational::from((x, denom.clone()))).collect())
    }

    /// Compose with `−α`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { Rational::from(-c) } else { c.clone() })
                .collect(),
        )
    }

    /// Rising factorial `(α + c)_n = (α+c)(α+c+1)…(α+c+n−1)`.
    pub fn rising(c: &Rational, n: usize) -> Self {
        let mut p = Self::one();
        for j in 0..n {
            p = p.mul_linear(&Rational::from(c + Integer::from(j)));
        }
        p
    }

    /// `C(α + c, n) = (α+c)(α+c−1)…(α+c−n+1)/n!`.
    pub fn binomial(c: &Rational, n: usize) -> Self {
        let mut p = Self::one();
        for j in 0..n {
            p = p.mul_linear(&Rational::from(c - Integer::from(j)));
        }
        p.scale(&Rational::from((Integer::from(1), Integer::from(Integer::factorial(n as u32)))))
    }

    /// Ascending coefficient list serialized as `p/q` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let abs = Rational::from(c.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs == 1;
            match (i, unit) {
                (0, _) => write!(f, "{}", format_rational(&abs))?,
                (1, true) => write!(f, "α")?,
                (1, false) => write!(f, "{}·α", format_rational(&abs))?,
                (_, true) => write!(f, "α^{i}")?,
                (_, false) => write!(f, "{}·α^{i}", format_rational(&abs))?,
            }
        }
        Ok(())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        RationalPolynomial::new(coeffs)
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        RationalPolynomial::new(coeffs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| Rational::from(-c)).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $m(self, rhs: RationalPolynomial) -> RationalPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
