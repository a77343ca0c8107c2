//! Weighted zero/pole counting in a rectangle: W always works, w needs even
//! vertex valuations and refuses otherwise.

use crate::error::{Error, Result};
use crate::poly::val_complex;
use crate::scalars::GaussianRational;
use crate::winding::{wind_w, wind_w_big, QuarterInt, RationalFunction, Rectangle};

/// Position of a point relative to a closed rectangle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointClass {
    Interior,
    Edge,
    Vertex,
    Exterior,
}

pub fn classify_point(z: &GaussianRational, rect: &Rectangle) -> PointClass {
    let x_in = rect.x0 < z.re && z.re < rect.x1;
    let y_in = rect.y0 < z.im && z.im < rect.y1;
    let x_on = z.re == rect.x0 || z.re == rect.x1;
    let y_on = z.im == rect.y0 || z.im == rect.y1;
    match (x_in, y_in, x_on, y_on) {
        (true, true, _, _) => PointClass::Interior,
        (_, _, true, true) => PointClass::Vertex,
        (true, _, _, true) | (_, true, true, _) => PointClass::Edge,
        _ => PointClass::Exterior,
    }
}

/// Counting weight of a point class: 1, 1/2, 1/4 or 0.
pub fn weight(class: PointClass) -> QuarterInt {
    QuarterInt::quarters(match class {
        PointClass::Interior => 4,
        PointClass::Edge => 2,
        PointClass::Vertex => 1,
        PointClass::Exterior => 0,
    })
}

/// A weighted zeros-minus-poles count; integer whenever the boundary is free
/// of zeros and poles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedCount {
    pub value: QuarterInt,
}

/// Valuations of the reduced f at the four corners, in counterclockwise order
/// starting from the bottom-left.
pub fn vertex_valuations(f: &RationalFunction, rect: &Rectangle) -> Result<[i64; 4]> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let corners = rect.corners();
    let mut out = [0i64; 4];
    for (slot, corner) in out.iter_mut().zip(corners.iter()) {
        // f is reduced, so both multiplicities are finite and not both positive.
        let v = val_complex(f.numerator(), f.denominator(), corner)?;
        *slot = v.finite().expect("nonzero function has finite valuations");
    }
    Ok(out)
}

/// Weighted count via W; valid for any nonzero rational function.
pub fn count_weighted(f: &RationalFunction, rect: &Rectangle) -> Result<WeightedCount> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(WeightedCount {
        value: wind_w_big(f, rect)?,
    })
}

const CORNER_NAMES: [&str; 4] = ["x0+iy0", "x1+iy0", "x1+iy1", "x0+iy1"];

/// Weighted count via plain w. Requires all four vertex valuations to be
/// even; otherwise w is simply wrong, so this refuses instead of falling back.
pub fn count_weighted_even(f: &RationalFunction, rect: &Rectangle) -> Result<WeightedCount> {
    let vals = vertex_valuations(f, rect)?;
    for (name, v) in CORNER_NAMES.iter().zip(vals.iter()) {
        if v.rem_euclid(2) != 0 {
            return Err(Error::OddVertexValuation {
                vertex: (*name).to_owned(),
                valuation: *v,
            });
        }
    }
    Ok(WeightedCount {
        value: wind_w(f, rect)?,
    })
}

/// Convenience alias for polynomials (denominator 1).
pub fn count_in(f: &crate::poly::ComplexPoly, rect: &Rectangle) -> Result<WeightedCount> {
    count_weighted(&RationalFunction::from_poly(f.clone()), rect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ComplexPoly;
    use crate::scalars::{rat, Rational};

    fn g(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational::new(re, im)
    }

    #[test]
    fn classification() {
        let rect = Rectangle::unit_square();
        assert_eq!(classify_point(&GaussianRational::zero(), &rect), PointClass::Vertex);
        assert_eq!(
            classify_point(&g(rat(1, 2), rat(0, 1)), &rect),
            PointClass::Edge
        );
        assert_eq!(
            classify_point(&g(rat(1, 2), rat(1, 2)), &rect),
            PointClass::Interior
        );
        assert_eq!(
            classify_point(&GaussianRational::from_ints(2, 2), &rect),
            PointClass::Exterior
        );
        assert_eq!(
            classify_point(&g(rat(0, 1), rat(1, 2)), &rect),
            PointClass::Edge
        );
    }

    #[test]
    fn vertex_valuations_examples() {
        let rect = Rectangle::unit_square();
        let z = RationalFunction::from_poly(ComplexPoly::z());
        assert_eq!(vertex_valuations(&z, &rect).unwrap(), [1, 0, 0, 0]);

        let inv_z =
            RationalFunction::new(ComplexPoly::constant(GaussianRational::one()), ComplexPoly::z())
                .unwrap();
        assert_eq!(vertex_valuations(&inv_z, &rect).unwrap(), [-1, 0, 0, 0]);

        let at_i = RationalFunction::from_poly(
            ComplexPoly::z_minus(&GaussianRational::i()).pow(2),
        );
        assert_eq!(vertex_valuations(&at_i, &rect).unwrap(), [0, 0, 0, 2]);
    }

    #[test]
    fn weighted_count_mixes_classes() {
        // Zeros at the vertex 0, the edge point 1/2 and the interior 1/2+i/2.
        let rect = Rectangle::unit_square();
        let f = RationalFunction::from_poly(
            &(&ComplexPoly::z() * &ComplexPoly::z_minus(&g(rat(1, 2), rat(0, 1))))
                * &ComplexPoly::z_minus(&g(rat(1, 2), rat(1, 2))),
        );
        assert_eq!(
            count_weighted(&f, &rect).unwrap().value,
            QuarterInt::quarters(7)
        );
    }

    #[test]
    fn weighted_count_with_pole() {
        // Zero inside, pole on an edge: 1 - 1/2.
        let rect = Rectangle::unit_square();
        let f = RationalFunction::new(
            ComplexPoly::z_minus(&g(rat(1, 2), rat(1, 2))),
            ComplexPoly::z_minus(&g(rat(1, 2), rat(0, 1))),
        )
        .unwrap();
        assert_eq!(
            count_weighted(&f, &rect).unwrap().value,
            QuarterInt::quarters(2)
        );
    }

    #[test]
    fn constants_count_zero() {
        let rect = Rectangle::unit_square();
        let c = RationalFunction::from_poly(ComplexPoly::constant(GaussianRational::from_ints(
            2, 1,
        )));
        assert!(count_weighted(&c, &rect).unwrap().value.is_zero());
    }

    #[test]
    fn even_variant_agrees_or_refuses() {
        let rect = Rectangle::unit_square();

        // Z^2 (Z - (1/2 + i/2)): vertex valuation 2 at the origin, even.
        let f = RationalFunction::from_poly(
            &ComplexPoly::z().pow(2) * &ComplexPoly::z_minus(&g(rat(1, 2), rat(1, 2))),
        );
        assert_eq!(
            count_weighted_even(&f, &rect).unwrap().value,
            QuarterInt::quarters(6)
        );

        // Z - 1/2: no vertex zeros at all.
        let edge = RationalFunction::from_poly(ComplexPoly::z_minus(&g(rat(1, 2), rat(0, 1))));
        assert_eq!(
            count_weighted_even(&edge, &rect).unwrap().value,
            QuarterInt::quarters(2)
        );

        // Z: odd valuation at the bottom-left corner.
        let z = RationalFunction::from_poly(ComplexPoly::z());
        match count_weighted_even(&z, &rect) {
            Err(Error::OddVertexValuation { vertex, valuation }) => {
                assert_eq!(vertex, "x0+iy0");
                assert_eq!(valuation, 1);
            }
            other => panic!("expected odd-valuation refusal, got {:?}", other),
        }
    }

    #[test]
    fn zero_function_is_rejected() {
        let rect = Rectangle::unit_square();
        let zero = RationalFunction::from_poly(ComplexPoly::zero());
        assert_eq!(count_weighted(&zero, &rect), Err(Error::ZeroFunction));
        assert_eq!(vertex_valuations(&zero, &rect), Err(Error::ZeroFunction));
    }
}
