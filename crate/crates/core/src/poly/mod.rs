//! Exact dense polynomials: real univariate, Gaussian univariate, Gaussian
//! bivariate, plus valuations and real-root isolation.

pub mod bivar;
pub mod complex;
pub mod real;
pub mod roots;

use std::fmt;

pub use bivar::{embed_bivariate, BivarComplexPoly};
pub use complex::ComplexPoly;
pub use real::RealPoly;
pub use roots::{has_root_closed, isolate_real_roots, AlgebraicRoot};

use crate::error::{Error, Result};
use crate::scalars::{GaussianRational, Rational};

/// Order of vanishing of a rational function at a point: finite, or +infinity
/// when the numerator is the zero polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_negative(&self) -> bool {
        matches!(self, Valuation::Finite(v) if *v < 0)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Valuation::Finite(0))
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{}", v),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

/// val_x(p/q) = mult_x(p) - mult_x(q), or +infinity when p = 0.
pub fn val(p: &RealPoly, q: &RealPoly, x: &Rational) -> Result<Valuation> {
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if p.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let (mp, _) = p.mult_at(x)?;
    let (mq, _) = q.mult_at(x)?;
    Ok(Valuation::Finite(mp as i64 - mq as i64))
}

/// val_z(f/g) on C(Z).
pub fn val_complex(f: &ComplexPoly, g: &ComplexPoly, z: &GaussianRational) -> Result<Valuation> {
    if g.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if f.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let (mf, _) = f.mult_at(z)?;
    let (mg, _) = g.mult_at(z)?;
    Ok(Valuation::Finite(mf as i64 - mg as i64))
}
