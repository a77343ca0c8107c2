//! Dense univariate polynomials over the Gaussian rationals Q(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::real::RealPoly;
use crate::scalars::{GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct ComplexPoly {
    coeffs: Vec<GaussianRational>,
}

impl ComplexPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ComplexPoly { coeffs }
    }

    pub fn zero() -> Self {
        ComplexPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// The variable Z.
    pub fn z() -> Self {
        Self::new(vec![GaussianRational::zero(), GaussianRational::one()])
    }

    /// `Z - z0`.
    pub fn z_minus(z0: &GaussianRational) -> Self {
        Self::new(vec![-z0, GaussianRational::one()])
    }

    pub fn from_real(p: &RealPoly) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| GaussianRational::from_rational(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by the scalar i.
    pub fn times_i(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_i()).collect())
    }

    /// Coefficient-wise conjugation. The result is meant to be evaluated at
    /// the conjugate of the original argument.
    pub fn conj_poly(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.conj()).collect())
    }

    /// Substitutes `Z = a + b*T`, returning a polynomial in T.
    pub fn subst_linear(&self, a: &GaussianRational, b: &GaussianRational) -> Self {
        let line = Self::new(vec![a.clone(), b.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &line) + &Self::constant(c.clone());
        }
        acc
    }

    /// Splits a polynomial with Gaussian coefficients into real and imaginary
    /// coefficient parts: `self = P + i*Q`.
    pub fn split_re_im(&self) -> (RealPoly, RealPoly) {
        let re = RealPoly::new(self.coeffs.iter().map(|c| c.re.clone()).collect());
        let im = RealPoly::new(self.coeffs.iter().map(|c| c.im.clone()).collect());
        (re, im)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); self.coeffs.len().saturating_sub(dd)];
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

    pub fn divide_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Writes `self = (Z - z)^m * cofactor` with `cofactor(z) != 0`.
    pub fn mult_at(&self, z: &GaussianRational) -> Result<(usize, ComplexPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let linear = Self::z_minus(z);
        let mut m = 0usize;
        let mut p = self.clone();
        while p.eval(z).is_zero() {
            p = p.divide_exact(&linear);
            m += 1;
        }
        Ok((m, p))
    }

    /// Monic greatest common divisor over Q(i).
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let mut u = a.clone();
        let mut v = b.clone();
        while !v.is_zero() {
            let (_, r) = u.div_rem(&v);
            u = v;
            v = r;
        }
        Ok(u.monic())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of |re| + |im| over the coefficients is never needed; this exposes
    /// the coefficient list for the root bound computation instead.
    pub fn coeff_l1_bound(c: &GaussianRational) -> Rational {
        let abs = |x: &Rational| if x < &Rational::zero() { -x.clone() } else { x.clone() };
        abs(&c.re) + abs(&c.im)
    }
}

impl fmt::Debug for ComplexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({})", c)?;
            } else if k == 1 {
                write!(f, "({})*Z", c)?;
            } else {
                write!(f, "({})*Z^{}", c, k)?;
            }
        }
        Ok(())
    }
}

impl Add for &ComplexPoly {
    type Output = ComplexPoly;
    fn add(self, rhs: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &ComplexPoly {
    type Output = ComplexPoly;
    fn sub(self, rhs: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &ComplexPoly {
    type Output = ComplexPoly;
    fn mul(self, rhs: &ComplexPoly) -> ComplexPoly {
        if self.is_zero() || rhs.is_zero() {
            return ComplexPoly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &out[i + j] + &(a * b);
                out[i + j] = t;
            }
        }
        ComplexPoly::new(out)
    }
}

impl Neg for &ComplexPoly {
    type Output = ComplexPoly;
    fn neg(self) -> ComplexPoly {
        ComplexPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    #[test]
    fn eval_at_i() {
        // Z^2 + 1 at i
        let p = ComplexPoly::new(vec![
            GaussianRational::one(),
            GaussianRational::zero(),
            GaussianRational::one(),
        ]);
        assert!(p.eval(&GaussianRational::i()).is_zero());
    }

    #[test]
    fn mult_at_triple_root() {
        // (Z - i)^3 (Z + 2)
        let p = &ComplexPoly::z_minus(&GaussianRational::i()).pow(3)
            * &ComplexPoly::z_minus(&GaussianRational::from_ints(-2, 0));
        let (m, cof) = p.mult_at(&GaussianRational::i()).unwrap();
        assert_eq!(m, 3);
        assert_eq!(cof, ComplexPoly::z_minus(&GaussianRational::from_ints(-2, 0)));
    }

    #[test]
    fn subst_linear_edges() {
        // Bottom edge of [0,1]^2: Z -> T
        let t = ComplexPoly::z().subst_linear(&GaussianRational::zero(), &GaussianRational::one());
        assert_eq!(t, ComplexPoly::z());

        // Right edge: Z -> 1 + iT
        let r = ComplexPoly::z().subst_linear(&GaussianRational::one(), &GaussianRational::i());
        assert_eq!(
            r,
            ComplexPoly::new(vec![GaussianRational::one(), GaussianRational::i()])
        );

        // Z^2 on the left edge of [0,1]^2 at x0 = 0: (iT)^2 = -T^2
        let p = ComplexPoly::z().pow(2);
        let l = p.subst_linear(&GaussianRational::zero(), &GaussianRational::i());
        assert_eq!(
            l,
            ComplexPoly::new(vec![
                GaussianRational::zero(),
                GaussianRational::zero(),
                GaussianRational::from_ints(-1, 0),
            ])
        );
    }

    #[test]
    fn split_parts() {
        // 1 + iT
        let p = ComplexPoly::new(vec![GaussianRational::one(), GaussianRational::i()]);
        let (re, im) = p.split_re_im();
        assert_eq!(re, RealPoly::one());
        assert_eq!(im, RealPoly::x());

        // (2+i)T
        let q = ComplexPoly::new(vec![GaussianRational::zero(), GaussianRational::from_ints(2, 1)]);
        let (re, im) = q.split_re_im();
        assert_eq!(re, RealPoly::from_ints(&[0, 2]));
        assert_eq!(im, RealPoly::from_ints(&[0, 1]));
    }

    #[test]
    fn conj_poly_examples() {
        let p = ComplexPoly::new(vec![GaussianRational::i(), GaussianRational::one()]);
        assert_eq!(
            p.conj_poly(),
            ComplexPoly::new(vec![-GaussianRational::i(), GaussianRational::one()])
        );
        let c = ComplexPoly::constant(GaussianRational::from_ints(3, 0));
        assert_eq!(c.conj_poly(), c);
    }

    #[test]
    fn complex_gcd() {
        let a = &ComplexPoly::z_minus(&GaussianRational::i()) * &ComplexPoly::z();
        let b = &ComplexPoly::z_minus(&GaussianRational::i())
            * &ComplexPoly::z_minus(&GaussianRational::one());
        let g = ComplexPoly::gcd(&a, &b).unwrap();
        assert_eq!(g, ComplexPoly::z_minus(&GaussianRational::i()));
        let _ = int(0);
    }
}
