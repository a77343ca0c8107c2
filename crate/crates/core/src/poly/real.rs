//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{int, sign, Rational};

/// Dense polynomial over Q. The coefficient at index `k` multiplies `X^k`;
/// the highest stored coefficient is nonzero and the zero polynomial is the
/// empty list.
#[derive(Clone, PartialEq, Eq)]
pub struct RealPoly {
    coeffs: Vec<Rational>,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The variable X.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// Convenience for tests: coefficients from low to high degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Product of `X - r` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = Self::one();
        for r in roots {
            p = &p * &Self::new(vec![-r.clone(), Rational::one()]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i32 {
        sign(&self.eval(x))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = Rational::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = Rational::one() / divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = &rem[rem.len() - 1] * &lead_inv;
            for j in 0..dd {
                let t = &rem[k + j] - &(&factor * &divisor.coeffs[j]);
                rem[k + j] = t;
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = factor;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Division known to be exact; debug-asserts a zero remainder.
    pub fn divide_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Writes `self = (X - x)^m * cofactor` with `cofactor(x) != 0`.
    pub fn mult_at(&self, x: &Rational) -> Result<(usize, RealPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let linear = Self::new(vec![-x.clone(), Rational::one()]);
        let mut m = 0usize;
        let mut p = self.clone();
        while p.eval(x).is_zero() {
            p = p.divide_exact(&linear);
            m += 1;
        }
        Ok((m, p))
    }

    /// Divides by the positive content, leaving coprime integer coefficients.
    /// Scaling is by a positive constant, so signs everywhere are unchanged.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let content = Rational::new(num_gcd, den_lcm);
        self.scale(&(Rational::one() / content))
    }

    /// Monic greatest common divisor, computed as a primitive remainder
    /// sequence to keep coefficients small.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let mut u = a.primitive();
        let mut v = b.primitive();
        while !v.is_zero() {
            let (_, r) = u.div_rem(&v);
            u = v;
            v = r.primitive();
        }
        Ok(u.monic())
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn square_free(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(self.monic());
        }
        let g = Self::gcd(self, &self.derivative())?;
        Ok(self.divide_exact(&g).monic())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if sign(c) < 0 {
                    write!(f, "-")?;
                }
            } else if sign(c) < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = if sign(c) < 0 { -c.clone() } else { c.clone() };
            if k == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if k == 1 {
                    write!(f, "X")?;
                } else {
                    write!(f, "X^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &RealPoly {
    type Output = RealPoly;
    fn add(self, rhs: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RealPoly {
    type Output = RealPoly;
    fn sub(self, rhs: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RealPoly {
    type Output = RealPoly;
    fn mul(self, rhs: &RealPoly) -> RealPoly {
        if self.is_zero() || rhs.is_zero() {
            return RealPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &out[i + j] + &(a * b);
                out[i + j] = t;
            }
        }
        RealPoly::new(out)
    }
}

impl Neg for &RealPoly {
    type Output = RealPoly;
    fn neg(self) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}
