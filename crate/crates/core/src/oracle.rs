//! Independent ground truth for the test suites: functions built from
//! prescribed roots and poles, direct weighted counting over those specs, and
//! a floating-point argument-principle integrator. The numeric check is the
//! only place in the library where floating point is allowed; it corroborates
//! exact results but never decides them.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::root_count::{classify_point, weight};
use crate::scalars::{GaussianRational, Rational};
use crate::winding::{QuarterInt, RationalFunction, Rectangle};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootKind {
    Zero,
    Pole,
}

/// One prescribed zero or pole with its multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSpec {
    pub location: GaussianRational,
    pub multiplicity: u32,
    pub kind: RootKind,
}

impl RootSpec {
    pub fn zero(location: GaussianRational, multiplicity: u32) -> Self {
        assert!(multiplicity >= 1);
        RootSpec {
            location,
            multiplicity,
            kind: RootKind::Zero,
        }
    }

    pub fn pole(location: GaussianRational, multiplicity: u32) -> Self {
        assert!(multiplicity >= 1);
        RootSpec {
            location,
            multiplicity,
            kind: RootKind::Pole,
        }
    }
}

fn check_disjoint(specs: &[RootSpec]) -> Result<()> {
    for (i, a) in specs.iter().enumerate() {
        for b in &specs[i + 1..] {
            if a.kind != b.kind && a.location == b.location {
                return Err(Error::OverlappingSpecs);
            }
        }
    }
    Ok(())
}

/// Builds prod (Z - z)^m / prod (Z - w)^n from the specs.
pub fn build_function(specs: &[RootSpec]) -> Result<RationalFunction> {
    check_disjoint(specs)?;
    let mut num = ComplexPoly::one();
    let mut den = ComplexPoly::one();
    for spec in specs {
        let factor = ComplexPoly::z_minus(&spec.location).pow(spec.multiplicity);
        match spec.kind {
            RootKind::Zero => num = &num * &factor,
            RootKind::Pole => den = &den * &factor,
        }
    }
    RationalFunction::new(num, den)
}

/// Direct weighted count over the specs: sum of sign * multiplicity * weight
/// with weights 1, 1/2, 1/4, 0 by point class.
pub fn expected_weighted_count(specs: &[RootSpec], rect: &Rectangle) -> Result<QuarterInt> {
    check_disjoint(specs)?;
    let mut acc = QuarterInt::zero();
    for spec in specs {
        let w = weight(classify_point(&spec.location, rect));
        let m = i64::from(spec.multiplicity);
        let signed = match spec.kind {
            RootKind::Zero => m,
            RootKind::Pole => -m,
        };
        let term = QuarterInt::new(w.value() * Rational::from_integer(signed.into()));
        acc = &acc + &term;
    }
    Ok(acc)
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

fn eval_f64(p: &ComplexPoly, z: num_complex::Complex64) -> num_complex::Complex64 {
    let mut acc = num_complex::Complex64::new(0.0, 0.0);
    for c in p.coeffs().iter().rev() {
        acc = acc * z + num_complex::Complex64::new(to_f64(&c.re), to_f64(&c.im));
    }
    acc
}

/// Accumulated argument change of f along the counterclockwise boundary,
/// divided by 2*pi. Sampling density doubles until the total is within 1e-3
/// of an integer, so branch cuts cannot be skipped for sane inputs.
pub fn numeric_winding(
    f: &RationalFunction,
    rect: &Rectangle,
    samples_per_edge: usize,
) -> Result<f64> {
    let n0 = samples_per_edge.max(64);
    let (x0, x1) = (to_f64(&rect.x0), to_f64(&rect.x1));
    let (y0, y1) = (to_f64(&rect.y0), to_f64(&rect.y1));

    let mut n = n0;
    loop {
        let mut points = Vec::with_capacity(4 * n);
        for k in 0..n {
            let t = k as f64 / n as f64;
            points.push(num_complex::Complex64::new(x0 + t * (x1 - x0), y0));
        }
        for k in 0..n {
            let t = k as f64 / n as f64;
            points.push(num_complex::Complex64::new(x1, y0 + t * (y1 - y0)));
        }
        for k in 0..n {
            let t = k as f64 / n as f64;
            points.push(num_complex::Complex64::new(x1 - t * (x1 - x0), y1));
        }
        for k in 0..n {
            let t = k as f64 / n as f64;
            points.push(num_complex::Complex64::new(x0, y1 - t * (y1 - y0)));
        }

        let mut total = 0.0_f64;
        let mut prev: Option<num_complex::Complex64> = None;
        let mut first: Option<num_complex::Complex64> = None;
        for z in &points {
            let v = eval_f64(f.numerator(), *z) / eval_f64(f.denominator(), *z);
            if !v.is_finite() || v.norm() < 1e-12 {
                return Err(Error::BoundaryZeroDetected);
            }
            if let Some(p) = prev {
                // per-segment phase delta, clamped to (-pi, pi) by arg()
                total += (v / p).arg();
            } else {
                first = Some(v);
            }
            prev = Some(v);
        }
        total += (first.unwrap() / prev.unwrap()).arg();

        let turns = total / std::f64::consts::TAU;
        if (turns - turns.round()).abs() < 1e-3 {
            return Ok(turns);
        }
        n *= 2;
        if n > (1 << 22) {
            return Err(Error::BoundaryZeroDetected);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn center() -> GaussianRational {
        GaussianRational::new(rat(1, 2), rat(1, 2))
    }

    #[test]
    fn build_examples() {
        let f = build_function(&[RootSpec::zero(GaussianRational::zero(), 1)]).unwrap();
        assert_eq!(f.numerator(), &ComplexPoly::z());

        let g = build_function(&[
            RootSpec::zero(GaussianRational::i(), 2),
            RootSpec::pole(GaussianRational::from_ints(1, 0), 1),
        ])
        .unwrap();
        assert_eq!(g.numerator().degree(), Some(2));
        assert_eq!(g.denominator().degree(), Some(1));

        let one = build_function(&[]).unwrap();
        assert_eq!(one.numerator(), &ComplexPoly::one());

        assert_eq!(
            build_function(&[
                RootSpec::zero(GaussianRational::i(), 1),
                RootSpec::pole(GaussianRational::i(), 1),
            ]),
            Err(Error::OverlappingSpecs)
        );
    }

    #[test]
    fn expected_count_examples() {
        let rect = Rectangle::unit_square();
        assert_eq!(
            expected_weighted_count(&[RootSpec::zero(GaussianRational::zero(), 1)], &rect)
                .unwrap(),
            QuarterInt::quarters(1)
        );
        assert_eq!(
            expected_weighted_count(
                &[
                    RootSpec::zero(GaussianRational::new(rat(1, 2), rat(0, 1)), 1),
                    RootSpec::pole(center(), 1),
                ],
                &rect
            )
            .unwrap(),
            QuarterInt::quarters(-2)
        );
        assert_eq!(
            expected_weighted_count(&[RootSpec::zero(GaussianRational::from_ints(5, 0), 3)], &rect)
                .unwrap(),
            QuarterInt::zero()
        );
    }

    #[test]
    fn numeric_winding_examples() {
        let rect = Rectangle::unit_square();

        let inside = build_function(&[RootSpec::zero(center(), 1)]).unwrap();
        let w = numeric_winding(&inside, &rect, 256).unwrap();
        assert!((w - 1.0).abs() < 1e-6, "got {}", w);

        let pole = build_function(&[RootSpec::pole(center(), 1)]).unwrap();
        let w = numeric_winding(&pole, &rect, 256).unwrap();
        assert!((w + 1.0).abs() < 1e-6, "got {}", w);

        let outside = build_function(&[RootSpec::zero(GaussianRational::from_ints(5, 0), 1)])
            .unwrap();
        let w = numeric_winding(&outside, &rect, 256).unwrap();
        assert!(w.abs() < 1e-6, "got {}", w);
    }

    #[test]
    fn boundary_zero_is_reported() {
        let rect = Rectangle::unit_square();
        let f = build_function(&[RootSpec::zero(
            GaussianRational::new(rat(1, 2), rat(0, 1)),
            1,
        )])
        .unwrap();
        // A zero sits exactly on a sample point of the bottom edge.
        assert_eq!(
            numeric_winding(&f, &rect, 64),
            Err(Error::BoundaryZeroDetected)
        );
    }
}
