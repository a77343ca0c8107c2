//! Bivariate polynomials in (X, Y) over the Gaussian rationals, used for the
//! embedding Z = X + iY.

use std::ops::{Add, Mul};

use crate::poly::complex::ComplexPoly;
use crate::scalars::{GaussianRational, Rational};

/// Coefficient `coeffs[i][j]` multiplies `X^i * Y^j`. Trailing all-zero rows
/// and columns are trimmed; the zero polynomial has an empty matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarComplexPoly {
    coeffs: Vec<Vec<GaussianRational>>,
}

impl BivarComplexPoly {
    pub fn new(mut coeffs: Vec<Vec<GaussianRational>>) -> Self {
        for row in &mut coeffs {
            while row.last().map_or(false, |c| c.is_zero()) {
                row.pop();
            }
        }
        while coeffs.last().map_or(false, |row| row.is_empty()) {
            coeffs.pop();
        }
        BivarComplexPoly { coeffs }
    }

    pub fn zero() -> Self {
        BivarComplexPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![vec![c]])
    }

    /// X + iY.
    pub fn x_plus_iy() -> Self {
        Self::new(vec![
            vec![GaussianRational::zero(), GaussianRational::i()],
            vec![GaussianRational::one()],
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> GaussianRational {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &GaussianRational, y: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for row in self.coeffs.iter().rev() {
            let mut row_acc = GaussianRational::zero();
            for c in row.iter().rev() {
                row_acc = &(&row_acc * y) + c;
            }
            acc = &(&acc * x) + &row_acc;
        }
        acc
    }

    /// Substitutes `Y = y0`, returning a univariate polynomial in X.
    pub fn substitute_y(&self, y0: &Rational) -> ComplexPoly {
        let y = GaussianRational::from_rational(y0.clone());
        let mut out = Vec::with_capacity(self.coeffs.len());
        for row in &self.coeffs {
            let mut acc = GaussianRational::zero();
            for c in row.iter().rev() {
                acc = &(&acc * &y) + c;
            }
            out.push(acc);
        }
        ComplexPoly::new(out)
    }

    /// Substitutes `X = x0`, returning a univariate polynomial in Y.
    pub fn substitute_x(&self, x0: &Rational) -> ComplexPoly {
        let x = GaussianRational::from_rational(x0.clone());
        let deg_y = self.coeffs.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut out = vec![GaussianRational::zero(); deg_y];
        let mut x_pow = GaussianRational::one();
        for row in &self.coeffs {
            for (j, c) in row.iter().enumerate() {
                out[j] = &out[j] + &(c * &x_pow);
            }
            x_pow = &x_pow * &x;
        }
        ComplexPoly::new(out)
    }

    /// Multiplies every coefficient by i.
    pub fn scale_by_i(&self) -> Self {
        BivarComplexPoly::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|c| c.mul_i()).collect())
                .collect(),
        )
    }

    /// Coefficient-wise real and imaginary parts: `self = Re + i*Im` with both
    /// results having purely real coefficients.
    pub fn split_re_im_bivar(&self) -> (BivarComplexPoly, BivarComplexPoly) {
        let part = |pick: fn(&GaussianRational) -> Rational| {
            BivarComplexPoly::new(
                self.coeffs
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|c| GaussianRational::from_rational(pick(c)))
                            .collect()
                    })
                    .collect(),
            )
        };
        (part(|c| c.re.clone()), part(|c| c.im.clone()))
    }
}

/// Expands F(Z) into C[X, Y] through Z = X + iY.
pub fn embed_bivariate(f: &ComplexPoly) -> BivarComplexPoly {
    let line = BivarComplexPoly::x_plus_iy();
    let mut acc = BivarComplexPoly::zero();
    for c in f.coeffs().iter().rev() {
        acc = &(&acc * &line) + &BivarComplexPoly::constant(c.clone());
    }
    acc
}

impl Add for &BivarComplexPoly {
    type Output = BivarComplexPoly;
    fn add(self, rhs: &BivarComplexPoly) -> BivarComplexPoly {
        let ni = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(ni);
        for i in 0..ni {
            let nj = self
                .coeffs
                .get(i)
                .map_or(0, |r| r.len())
                .max(rhs.coeffs.get(i).map_or(0, |r| r.len()));
            out.push((0..nj).map(|j| &self.coeff(i, j) + &rhs.coeff(i, j)).collect());
        }
        BivarComplexPoly::new(out)
    }
}

impl Mul for &BivarComplexPoly {
    type Output = BivarComplexPoly;
    fn mul(self, rhs: &BivarComplexPoly) -> BivarComplexPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarComplexPoly::zero();
        }
        let ni = self.coeffs.len() + rhs.coeffs.len() - 1;
        let nj = self.coeffs.iter().map(|r| r.len()).max().unwrap()
            + rhs.coeffs.iter().map(|r| r.len()).max().unwrap();
        let mut out = vec![vec![GaussianRational::zero(); nj]; ni];
        for (i1, row1) in self.coeffs.iter().enumerate() {
            for (j1, c1) in row1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (i2, row2) in rhs.coeffs.iter().enumerate() {
                    for (j2, c2) in row2.iter().enumerate() {
                        let t = &out[i1 + i2][j1 + j2] + &(c1 * c2);
                        out[i1 + i2][j1 + j2] = t;
                    }
                }
            }
        }
        BivarComplexPoly::new(out)
    }
}
