//! Bad-number detection and the auxiliary product formula with its adapted
//! endpoint variants, exposed as first-class testable identities.

use crate::cauchy::{ind_interval, sign_at, var_ab, HalfInt, PolyPair};
use crate::error::{Error, Result};
use crate::poly::{val, RealPoly, Valuation};
use crate::scalars::Rational;

/// The valuation data behind the bad-number test at a point c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadNumberReport {
    pub is_bad: bool,
    /// val_c(P/Q), when Q is nonzero.
    pub val_pq: Option<Valuation>,
    /// val_c(R/S), when S is nonzero.
    pub val_rs: Option<Valuation>,
    /// val_c((PS + QR) / QS), when Q and S are nonzero.
    pub val_cross: Option<Valuation>,
}

/// c is bad when Q, S are nonzero, val_c(P/Q) = val_c(R/S) < 0 and the cross
/// term (PS + QR)/QS has valuation exactly 0.
pub fn bad_number_report(
    p: &RealPoly,
    q: &RealPoly,
    r: &RealPoly,
    s: &RealPoly,
    c: &Rational,
) -> BadNumberReport {
    if q.is_zero() || s.is_zero() {
        return BadNumberReport {
            is_bad: false,
            val_pq: if q.is_zero() { None } else { Some(val(p, q, c).unwrap()) },
            val_rs: if s.is_zero() { None } else { Some(val(r, s, c).unwrap()) },
            val_cross: None,
        };
    }
    let val_pq = val(p, q, c).unwrap();
    let val_rs = val(r, s, c).unwrap();
    let cross_num = &(&(p * s) + &(q * r));
    let cross_den = &(q * s);
    let val_cross = val(cross_num, cross_den, c).unwrap();
    let is_bad = val_pq == val_rs && val_pq.is_negative() && val_cross.is_zero();
    BadNumberReport {
        is_bad,
        val_pq: Some(val_pq),
        val_rs: Some(val_rs),
        val_cross: Some(val_cross),
    }
}

/// Which endpoints of [a, b] are bad numbers for (P, Q, R, S).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    NeitherBad,
    ABad,
    BBad,
    BothBad,
}

impl Variant {
    pub fn tag(&self) -> &'static str {
        match self {
            Variant::NeitherBad => "neither-bad",
            Variant::ABad => "a-bad",
            Variant::BBad => "b-bad",
            Variant::BothBad => "both-bad",
        }
    }
}

/// Evaluates both sides of the product formula matching the endpoint
/// classification. The contract is lhs = rhs in every variant; callers assert
/// it so failures localize to lhs, rhs or the classification.
pub fn aux_product_sides(
    p: &RealPoly,
    q: &RealPoly,
    r: &RealPoly,
    s: &RealPoly,
    a: &Rational,
    b: &Rational,
) -> Result<(HalfInt, HalfInt, Variant)> {
    if a >= b {
        return Err(Error::Precondition("aux product formula requires a < b"));
    }
    if p.is_zero() && q.is_zero() {
        return Err(Error::Precondition("P and Q are both zero"));
    }
    if r.is_zero() && s.is_zero() {
        return Err(Error::Precondition("R and S are both zero"));
    }

    let cross_num = &(p * s) + &(q * r);
    let cross_den = q * s;
    let cross = PolyPair::new(cross_num.clone(), cross_den);
    let lhs_pair = PolyPair::new(&(p * r) - &(q * s), cross_num);
    let lhs = ind_interval(&lhs_pair, a, b);

    let a_bad = bad_number_report(p, q, r, s, a).is_bad;
    let b_bad = bad_number_report(p, q, r, s, b).is_bad;
    let variant = match (a_bad, b_bad) {
        (false, false) => Variant::NeitherBad,
        (true, false) => Variant::ABad,
        (false, true) => Variant::BBad,
        (true, true) => Variant::BothBad,
    };

    let base = &ind_interval(&PolyPair::new(p.clone(), q.clone()), a, b)
        + &ind_interval(&PolyPair::new(r.clone(), s.clone()), a, b);
    let rhs = match variant {
        Variant::NeitherBad => &base - &var_ab(&cross, a, b),
        Variant::ABad => &base - &HalfInt::halves(i64::from(sign_at(&cross, b))),
        Variant::BBad => &base + &HalfInt::halves(i64::from(sign_at(&cross, a))),
        Variant::BothBad => base,
    };
    Ok((lhs, rhs, variant))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    // The quadruple P = 1, Q = X, R = X - 1, S = X on [0, 1].
    fn example_quadruple() -> (RealPoly, RealPoly, RealPoly, RealPoly) {
        (
            RealPoly::one(),
            RealPoly::x(),
            RealPoly::from_ints(&[-1, 1]),
            RealPoly::x(),
        )
    }

    #[test]
    fn bad_number_detection() {
        let (p, q, r, s) = example_quadruple();
        assert!(bad_number_report(&p, &q, &r, &s, &int(0)).is_bad);
        assert!(!bad_number_report(&p, &q, &r, &s, &int(1)).is_bad);
        assert!(!bad_number_report(&p, &RealPoly::zero(), &r, &s, &int(0)).is_bad);
    }

    #[test]
    fn variant_a_bad_holds_in_the_example() {
        let (p, q, r, s) = example_quadruple();
        let (lhs, rhs, variant) = aux_product_sides(&p, &q, &r, &s, &int(0), &int(1)).unwrap();
        assert_eq!(variant, Variant::ABad);
        assert_eq!(lhs, HalfInt::halves(-1));
        assert_eq!(rhs, HalfInt::halves(-1));
    }

    #[test]
    fn plain_formula_fails_in_the_example() {
        // The uncorrected identity with the Var term does not hold here.
        let (p, q, r, s) = example_quadruple();
        let cross = PolyPair::new(&(&p * &s) + &(&q * &r), &q * &s);
        let lhs = ind_interval(
            &PolyPair::new(&(&p * &r) - &(&q * &s), &(&p * &s) + &(&q * &r)),
            &int(0),
            &int(1),
        );
        let naive_rhs = &(&ind_interval(&PolyPair::new(p.clone(), q.clone()), &int(0), &int(1))
            + &ind_interval(&PolyPair::new(r, s), &int(0), &int(1)))
            - &var_ab(&cross, &int(0), &int(1));
        assert_ne!(lhs, naive_rhs);
    }

    #[test]
    fn shifted_interval_is_neither_bad() {
        let (p, q, r, s) = example_quadruple();
        let (lhs, rhs, variant) = aux_product_sides(&p, &q, &r, &s, &int(-1), &int(2)).unwrap();
        assert_eq!(variant, Variant::NeitherBad);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_numerator_case() {
        // P = 0: lhs reduces to Ind(-S, R), covered by the P = 0 lemma.
        let r = RealPoly::from_ints(&[2, -1]);
        let s = RealPoly::from_ints(&[0, 1]);
        let (lhs, rhs, _) = aux_product_sides(
            &RealPoly::zero(),
            &RealPoly::one(),
            &r,
            &s,
            &int(0),
            &int(1),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(
            lhs,
            ind_interval(&PolyPair::new(-&s, r), &int(0), &int(1))
        );
    }

    #[test]
    fn precondition_errors() {
        let (p, q, r, s) = example_quadruple();
        assert!(aux_product_sides(&p, &q, &r, &s, &int(1), &int(0)).is_err());
        assert!(aux_product_sides(
            &RealPoly::zero(),
            &RealPoly::zero(),
            &r,
            &s,
            &int(0),
            &int(1)
        )
        .is_err());
    }
}
