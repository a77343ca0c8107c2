//! Sign, Var and Cauchy indices of pairs of real polynomials, at points and
//! over closed intervals, with the endpoint half-contribution conventions.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::roots::{isolate_real_roots, merge_sorted_roots, separate_strictly};
use crate::poly::RealPoly;
use crate::scalars::{int, rat, sign, Rational};

/// An exact multiple of 1/2. Cauchy indices, Sign and Var values live here.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfInt {
    value: Rational,
}

impl HalfInt {
    pub fn new(value: Rational) -> Self {
        assert!(
            (&value * int(2)).denom() == &BigInt::one(),
            "not a multiple of 1/2: {}",
            value
        );
        HalfInt { value }
    }

    pub fn zero() -> Self {
        HalfInt {
            value: Rational::zero(),
        }
    }

    /// `n/2`.
    pub fn halves(n: i64) -> Self {
        HalfInt { value: rat(n, 2) }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for &HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: &HalfInt) -> HalfInt {
        HalfInt {
            value: &self.value + &rhs.value,
        }
    }
}

impl Sub for &HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: &HalfInt) -> HalfInt {
        HalfInt {
            value: &self.value - &rhs.value,
        }
    }
}

impl Neg for &HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            value: -self.value.clone(),
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        &self + &rhs
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        &self - &rhs
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        -&self
    }
}

/// A pair (P, Q) of real polynomials. Q = 0 is deliberately allowed; each
/// operation states its own conventions for it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyPair {
    pub p: RealPoly,
    pub q: RealPoly,
}

impl PolyPair {
    pub fn new(p: RealPoly, q: RealPoly) -> Self {
        PolyPair { p, q }
    }

    /// The pair with the arguments swapped.
    pub fn swapped(&self) -> Self {
        PolyPair {
            p: self.q.clone(),
            q: self.p.clone(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Plus,
    Minus,
}

/// Sign(P, Q, x): sign of P_x(x) Q_x(x) when P, Q are nonzero and
/// val_x(P/Q) = 0, and 0 otherwise.
pub fn sign_at(pair: &PolyPair, x: &Rational) -> i32 {
    if pair.p.is_zero() || pair.q.is_zero() {
        return 0;
    }
    let (mp, px) = pair.p.mult_at(x).unwrap();
    let (mq, qx) = pair.q.mult_at(x).unwrap();
    if mp != mq {
        return 0;
    }
    sign(&(px.eval(x) * qx.eval(x)))
}

/// Var_x(P, Q) = 1/2 - 1/2 Sign(P, Q, x).
pub fn var_at(pair: &PolyPair, x: &Rational) -> HalfInt {
    HalfInt::halves(1 - i64::from(sign_at(pair, x)))
}

/// Var_a^b(P, Q) = Var_a(P, Q) - Var_b(P, Q).
pub fn var_ab(pair: &PolyPair, a: &Rational, b: &Rational) -> HalfInt {
    HalfInt::halves(i64::from(sign_at(pair, b)) - i64::from(sign_at(pair, a)))
}

/// One-sided Cauchy index at a point: nonzero only when val_x(P/Q) < 0.
pub fn ind_point(pair: &PolyPair, x: &Rational, side: Side) -> HalfInt {
    if pair.p.is_zero() || pair.q.is_zero() {
        return HalfInt::zero();
    }
    let (mp, px) = pair.p.mult_at(x).unwrap();
    let (mq, qx) = pair.q.mult_at(x).unwrap();
    if mp >= mq {
        return HalfInt::zero();
    }
    let s = i64::from(sign(&(px.eval(x) * qx.eval(x))));
    match side {
        Side::Plus => HalfInt::halves(s),
        Side::Minus => {
            let v = mp as i64 - mq as i64;
            if v.is_even() {
                HalfInt::halves(s)
            } else {
                HalfInt::halves(-s)
            }
        }
    }
}

/// Ind_x(P, Q) = Ind_x^+(P, Q) - Ind_x^-(P, Q).
pub fn ind_point_full(pair: &PolyPair, x: &Rational) -> HalfInt {
    &ind_point(pair, x, Side::Plus) - &ind_point(pair, x, Side::Minus)
}

/// Ind_a^b(P, Q): endpoint half-contributions plus the interior jumps,
/// antisymmetric under endpoint swap, 0 when a = b.
pub fn ind_interval(pair: &PolyPair, a: &Rational, b: &Rational) -> HalfInt {
    ind_interval_both(pair, a, b).0
}

/// Ind_a^b(P, Q) together with Ind_a^b(-Q, P) from a single root isolation
/// pass. The second index is what the 90-degree rotation iF of F = P + iQ
/// needs, so computing both at once halves the work of W.
pub fn ind_interval_both(pair: &PolyPair, a: &Rational, b: &Rational) -> (HalfInt, HalfInt) {
    if a == b {
        return (HalfInt::zero(), HalfInt::zero());
    }
    if b < a {
        let (x, y) = ind_interval_both(pair, b, a);
        return (-&x, -&y);
    }
    if pair.p.is_zero() || pair.q.is_zero() {
        return (HalfInt::zero(), HalfInt::zero());
    }

    // Removing a common factor changes neither Sign, Var nor Ind, and neither
    // does scaling by a positive constant.
    let g = RealPoly::gcd(&pair.p, &pair.q).unwrap();
    let p = pair.p.divide_exact(&g).primitive();
    let q = pair.q.divide_exact(&g).primitive();

    // With p, q coprime, jumps happen only at roots of q; between consecutive
    // roots of p*q the sign of p/q is the constant sign of p*q.
    let p_roots = if p.degree().map_or(false, |d| d >= 1) {
        isolate_real_roots(&p, a, b).unwrap()
    } else {
        Vec::new()
    };
    let q_roots = if q.degree().map_or(false, |d| d >= 1) {
        isolate_real_roots(&q, a, b).unwrap()
    } else {
        Vec::new()
    };
    let mut merged = merge_sorted_roots(vec![(p_roots, false), (q_roots, true)]);
    {
        let mut roots_only: Vec<_> = merged.iter().map(|(r, _)| r.clone()).collect();
        separate_strictly(&mut roots_only);
        for (slot, r) in merged.iter_mut().zip(roots_only) {
            slot.0 = r;
        }
    }

    let w = &p * &q;
    // Sample points: one in each gap of a < r_1 < ... < r_k < b.
    let mut samples = Vec::with_capacity(merged.len() + 1);
    let mut prev_hi = a.clone();
    for (r, _) in &merged {
        samples.push((&prev_hi + r.lo()) / int(2));
        prev_hi = r.hi().clone();
    }
    samples.push((&prev_hi + b) / int(2));
    let signs: Vec<i64> = samples
        .iter()
        .map(|s| {
            let v = i64::from(sign(&w.eval(s)));
            debug_assert!(v != 0, "sample point hit a root");
            v
        })
        .collect();

    // First index: jumps of p/q at roots of q, sign data from w = p*q.
    // Second index: the pair (-q, p) has jumps at roots of p with sign data
    // from -q*p = -w, over the same gap decomposition.
    let mut total = HalfInt::zero();
    let mut rotated = HalfInt::zero();
    for (j, (_, is_pole)) in merged.iter().enumerate() {
        if *is_pole {
            total = &total + &HalfInt::halves(signs[j + 1] - signs[j]);
        } else {
            rotated = &rotated - &HalfInt::halves(signs[j + 1] - signs[j]);
        }
    }
    if q.eval(a).is_zero() {
        total = &total + &HalfInt::halves(signs[0]);
    }
    if q.eval(b).is_zero() {
        total = &total - &HalfInt::halves(signs[signs.len() - 1]);
    }
    if p.eval(a).is_zero() {
        rotated = &rotated - &HalfInt::halves(signs[0]);
    }
    if p.eval(b).is_zero() {
        rotated = &rotated + &HalfInt::halves(signs[signs.len() - 1]);
    }
    (total, rotated)
}

/// Ind_a^b(P, Q) + Ind_a^b(Q, P) - Var_a^b(P, Q); always 0 by the inversion
/// formula. Kept as a first-class value so tests can localize failures.
pub fn inversion_residual(pair: &PolyPair, a: &Rational, b: &Rational) -> HalfInt {
    let fwd = ind_interval(pair, a, b);
    let inv = ind_interval(&pair.swapped(), a, b);
    let var = var_ab(pair, a, b);
    &(&fwd + &inv) - &var
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(p: &[i64], q: &[i64]) -> PolyPair {
        PolyPair::new(RealPoly::from_ints(p), RealPoly::from_ints(q))
    }

    #[test]
    fn sign_at_examples() {
        // (X^2, X^2) at 0: valuation 0, cofactors 1*1
        assert_eq!(sign_at(&pair(&[0, 0, 1], &[0, 0, 1]), &int(0)), 1);
        // (1, X) at 0: valuation -1
        assert_eq!(sign_at(&pair(&[1], &[0, 1]), &int(0)), 0);
        // (X, 0) at 1: Q = 0
        assert_eq!(sign_at(&pair(&[0, 1], &[]), &int(1)), 0);
    }

    #[test]
    fn var_examples() {
        assert_eq!(var_at(&pair(&[1], &[0, 1]), &int(0)), HalfInt::halves(1));
        // Example quadruple: Var_0^1(PS + QR, QS) with PS + QR = X^2, QS = X^2
        assert_eq!(
            var_ab(&pair(&[0, 0, 1], &[0, 0, 1]), &int(0), &int(1)),
            HalfInt::zero()
        );
        assert_eq!(var_ab(&pair(&[1], &[1]), &int(-3), &int(7)), HalfInt::zero());
    }

    #[test]
    fn ind_point_examples() {
        let pq = pair(&[1], &[0, 1]); // 1/X
        assert_eq!(ind_point(&pq, &int(0), Side::Plus), HalfInt::halves(1));
        assert_eq!(ind_point_full(&pq, &int(0)), HalfInt::halves(2));
        // even valuation: same branch on both sides
        let pq2 = pair(&[1], &[0, 0, 1]); // 1/X^2
        assert_eq!(ind_point_full(&pq2, &int(0)), HalfInt::zero());
    }

    #[test]
    fn ind_interval_worked_quadruple() {
        // P = 1, Q = X, R = X - 1, S = X
        assert_eq!(
            ind_interval(&pair(&[1], &[0, 1]), &int(0), &int(1)),
            HalfInt::halves(1)
        );
        assert_eq!(
            ind_interval(&pair(&[-1, 1], &[0, 1]), &int(0), &int(1)),
            HalfInt::halves(-1)
        );
        // PR - QS = -X^2 + X - 1, PS + QR = X^2
        assert_eq!(
            ind_interval(&pair(&[-1, 1, -1], &[0, 0, 1]), &int(0), &int(1)),
            HalfInt::halves(-1)
        );
    }

    #[test]
    fn ind_interval_degenerate_and_swap() {
        let pq = pair(&[1, 2, 3], &[0, 1, 1]);
        assert_eq!(ind_interval(&pq, &int(2), &int(2)), HalfInt::zero());
        assert_eq!(
            ind_interval(&pq, &int(-3), &int(3)),
            -&ind_interval(&pq, &int(3), &int(-3))
        );
    }

    #[test]
    fn zero_polynomial_conventions() {
        assert_eq!(
            ind_interval(&pair(&[0, 1], &[]), &int(0), &int(1)),
            HalfInt::zero()
        );
        assert_eq!(
            ind_interval(&pair(&[], &[0, 1]), &int(0), &int(1)),
            HalfInt::zero()
        );
    }

    #[test]
    fn inversion_residual_examples() {
        assert_eq!(
            inversion_residual(&pair(&[1], &[0, 1]), &int(0), &int(1)),
            HalfInt::zero()
        );
        assert_eq!(
            inversion_residual(&pair(&[0, 1], &[0, 1]), &int(0), &int(1)),
            HalfInt::zero()
        );
    }
}
