//! Algebraic winding numbers w and W of complex rational functions (and
//! bivariate polynomials) on rectangle boundaries.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cauchy::{ind_interval, ind_interval_both, HalfInt, PolyPair};
use crate::error::{Error, Result};
use crate::poly::{BivarComplexPoly, ComplexPoly};
use crate::scalars::{rat, GaussianRational, Rational};

/// Axis-aligned rectangle [x0, x1] x [y0, y1] with rational corners.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rectangle {
    pub x0: Rational,
    pub x1: Rational,
    pub y0: Rational,
    pub y1: Rational,
}

impl Rectangle {
    pub fn new(x0: Rational, x1: Rational, y0: Rational, y1: Rational) -> Result<Self> {
        if x0 >= x1 || y0 >= y1 {
            return Err(Error::Precondition("rectangle requires x0 < x1 and y0 < y1"));
        }
        Ok(Rectangle { x0, x1, y0, y1 })
    }

    pub fn from_ints(x0: i64, x1: i64, y0: i64, y1: i64) -> Self {
        Self::new(
            Rational::from_integer(BigInt::from(x0)),
            Rational::from_integer(BigInt::from(x1)),
            Rational::from_integer(BigInt::from(y0)),
            Rational::from_integer(BigInt::from(y1)),
        )
        .unwrap()
    }

    /// The unit square [0,1] x [0,1].
    pub fn unit_square() -> Self {
        Self::from_ints(0, 1, 0, 1)
    }

    /// Corners counterclockwise from (x0, y0).
    pub fn corners(&self) -> [GaussianRational; 4] {
        [
            GaussianRational::new(self.x0.clone(), self.y0.clone()),
            GaussianRational::new(self.x1.clone(), self.y0.clone()),
            GaussianRational::new(self.x1.clone(), self.y1.clone()),
            GaussianRational::new(self.x0.clone(), self.y1.clone()),
        ]
    }

    pub fn width(&self) -> Rational {
        &self.x1 - &self.x0
    }

    pub fn height(&self) -> Rational {
        &self.y1 - &self.y0
    }
}

/// An exact multiple of 1/4; winding numbers and weighted counts live here.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuarterInt {
    value: Rational,
}

impl QuarterInt {
    pub fn new(value: Rational) -> Self {
        assert!(
            (&value * Rational::from_integer(BigInt::from(4))).denom() == &BigInt::one(),
            "not a multiple of 1/4: {}",
            value
        );
        QuarterInt { value }
    }

    pub fn zero() -> Self {
        QuarterInt {
            value: Rational::zero(),
        }
    }

    /// `n/4`.
    pub fn quarters(n: i64) -> Self {
        QuarterInt { value: rat(n, 4) }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.value.denom() == &BigInt::one()
    }

    /// The integer value, when the quantity is an integer.
    pub fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            // winding numbers at desk scale fit comfortably
            Some(i64::try_from(self.value.numer().clone()).expect("winding count overflow"))
        } else {
            None
        }
    }
}

impl From<HalfInt> for QuarterInt {
    fn from(h: HalfInt) -> Self {
        QuarterInt {
            value: h.value().clone(),
        }
    }
}

impl fmt::Debug for QuarterInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for QuarterInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for &QuarterInt {
    type Output = QuarterInt;
    fn add(self, rhs: &QuarterInt) -> QuarterInt {
        QuarterInt {
            value: &self.value + &rhs.value,
        }
    }
}

impl Sub for &QuarterInt {
    type Output = QuarterInt;
    fn sub(self, rhs: &QuarterInt) -> QuarterInt {
        QuarterInt {
            value: &self.value - &rhs.value,
        }
    }
}

impl Neg for &QuarterInt {
    type Output = QuarterInt;
    fn neg(self) -> QuarterInt {
        QuarterInt {
            value: -self.value.clone(),
        }
    }
}

impl Add for QuarterInt {
    type Output = QuarterInt;
    fn add(self, rhs: QuarterInt) -> QuarterInt {
        &self + &rhs
    }
}

impl Sub for QuarterInt {
    type Output = QuarterInt;
    fn sub(self, rhs: QuarterInt) -> QuarterInt {
        &self - &rhs
    }
}

impl Neg for QuarterInt {
    type Output = QuarterInt;
    fn neg(self) -> QuarterInt {
        -&self
    }
}

/// A rational function F/G in C(Z), stored gcd-reduced with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    numerator: ComplexPoly,
    denominator: ComplexPoly,
}

impl RationalFunction {
    pub fn new(numerator: ComplexPoly, denominator: ComplexPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if numerator.is_zero() {
            return Ok(RationalFunction {
                numerator: ComplexPoly::zero(),
                denominator: ComplexPoly::one(),
            });
        }
        let g = ComplexPoly::gcd(&numerator, &denominator)?;
        let num = numerator.divide_exact(&g);
        let den = denominator.divide_exact(&g);
        let lead_inv = den.leading().unwrap().inv().unwrap();
        Ok(RationalFunction {
            numerator: num.scale(&lead_inv),
            denominator: den.monic(),
        })
    }

    pub fn from_poly(p: ComplexPoly) -> Self {
        RationalFunction {
            numerator: p,
            denominator: ComplexPoly::one(),
        }
    }

    pub fn numerator(&self) -> &ComplexPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &ComplexPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
        .expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    /// Multiplies the numerator by a scalar.
    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::from_poly(ComplexPoly::zero());
        }
        RationalFunction {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// i * (F/G); the definition of W applies ind to iF.
    pub fn times_i(&self) -> Self {
        RationalFunction {
            numerator: self.numerator.times_i(),
            denominator: self.denominator.clone(),
        }
    }
}

/// The four (P_k, Q_k) pairs for the edges of a rectangle, indexed by the
/// parametrizations (T, y0), (x1, T), (T, y1), (x0, T).
#[derive(Clone, Debug)]
pub struct EdgeRestrictions {
    pub bottom: PolyPair,
    pub right: PolyPair,
    pub top: PolyPair,
    pub left: PolyPair,
}

/// Restrictions of F * conj(G) to the four edge lines. The conjugate factor
/// is evaluated at the conjugated parametrization.
pub fn edge_restrictions(f: &RationalFunction, rect: &Rectangle) -> Result<EdgeRestrictions> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let gbar = f.denominator().conj_poly();
    let i = GaussianRational::i();
    let one = GaussianRational::one();
    let edge = |a: GaussianRational, b: GaussianRational| -> PolyPair {
        let h = &f.numerator().subst_linear(&a, &b)
            * &gbar.subst_linear(&a.conj(), &b.conj());
        let (p, q) = h.split_re_im();
        PolyPair::new(p, q)
    };
    let iy0 = GaussianRational::new(Rational::zero(), rect.y0.clone());
    let iy1 = GaussianRational::new(Rational::zero(), rect.y1.clone());
    let x0 = GaussianRational::from_rational(rect.x0.clone());
    let x1 = GaussianRational::from_rational(rect.x1.clone());
    Ok(EdgeRestrictions {
        bottom: edge(iy0, one.clone()),
        right: edge(x1, i.clone()),
        top: edge(iy1, one),
        left: edge(x0, i),
    })
}

/// Restrictions of a bivariate polynomial to the four edge lines.
pub fn edge_restrictions_bivar(f: &BivarComplexPoly, rect: &Rectangle) -> Result<EdgeRestrictions> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let pair = |p: ComplexPoly| {
        let (re, im) = p.split_re_im();
        PolyPair::new(re, im)
    };
    Ok(EdgeRestrictions {
        bottom: pair(f.substitute_y(&rect.y0)),
        right: pair(f.substitute_x(&rect.x1)),
        top: pair(f.substitute_y(&rect.y1)),
        left: pair(f.substitute_x(&rect.x0)),
    })
}

fn oriented_indices(er: &EdgeRestrictions, rect: &Rectangle) -> [HalfInt; 4] {
    [
        ind_interval(&er.bottom, &rect.x0, &rect.x1),
        ind_interval(&er.right, &rect.y0, &rect.y1),
        ind_interval(&er.top, &rect.x1, &rect.x0),
        ind_interval(&er.left, &rect.y1, &rect.y0),
    ]
}

// Indices of F and of iF together: the edge pair of iF is the rotation
// (-Q, P) of F's pair, which ind_interval_both produces from the same root
// isolation.
fn oriented_indices_both(er: &EdgeRestrictions, rect: &Rectangle) -> ([HalfInt; 4], [HalfInt; 4]) {
    let bottom = ind_interval_both(&er.bottom, &rect.x0, &rect.x1);
    let right = ind_interval_both(&er.right, &rect.y0, &rect.y1);
    let top = ind_interval_both(&er.top, &rect.x1, &rect.x0);
    let left = ind_interval_both(&er.left, &rect.y1, &rect.y0);
    (
        [bottom.0, right.0, top.0, left.0],
        [bottom.1, right.1, top.1, left.1],
    )
}

fn half_sum(indices: &[HalfInt; 4]) -> QuarterInt {
    let sum = indices
        .iter()
        .fold(HalfInt::zero(), |acc, h| &acc + h);
    QuarterInt::new(sum.value() / Rational::from_integer(BigInt::from(2)))
}

/// The winding number w: half the sum of the four oriented edge Cauchy
/// indices of (re, im).
pub fn wind_w(f: &RationalFunction, rect: &Rectangle) -> Result<QuarterInt> {
    let er = edge_restrictions(f, rect)?;
    Ok(half_sum(&oriented_indices(&er, rect)))
}

/// The winding number W = (w(F) + w(iF)) / 2, well behaved for boundary
/// zeros and poles.
pub fn wind_w_big(f: &RationalFunction, rect: &Rectangle) -> Result<QuarterInt> {
    let er = edge_restrictions(f, rect)?;
    let (ind_f, ind_if) = oriented_indices_both(&er, rect);
    let a = half_sum(&ind_f);
    let b = half_sum(&ind_if);
    Ok(QuarterInt::new(
        (a.value() + b.value()) / Rational::from_integer(BigInt::from(2)),
    ))
}

/// The four oriented edge indices together with their halved sum.
pub fn wind_w_raw_sum(
    f: &RationalFunction,
    rect: &Rectangle,
) -> Result<([HalfInt; 4], QuarterInt)> {
    let er = edge_restrictions(f, rect)?;
    let indices = oriented_indices(&er, rect);
    let total = half_sum(&indices);
    Ok((indices, total))
}

/// w for a bivariate polynomial in C[X, Y].
pub fn wind_w_bivar(f: &BivarComplexPoly, rect: &Rectangle) -> Result<QuarterInt> {
    let er = edge_restrictions_bivar(f, rect)?;
    Ok(half_sum(&oriented_indices(&er, rect)))
}

/// W for a bivariate polynomial in C[X, Y].
pub fn wind_w_big_bivar(f: &BivarComplexPoly, rect: &Rectangle) -> Result<QuarterInt> {
    let fi = f.scale_by_i();
    let a = wind_w_bivar(f, rect)?;
    let b = wind_w_bivar(&fi, rect)?;
    Ok(QuarterInt::new(
        (a.value() + b.value()) / Rational::from_integer(BigInt::from(2)),
    ))
}
