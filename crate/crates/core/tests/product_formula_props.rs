//! The auxiliary product formula, lhs against rhs, over random quadruples and
//! targeted bad-endpoint constructions covering all four variants.

mod common;

use num_traits::Zero;
use rand_chacha::ChaCha8Rng;
use rectwind::{aux_product_sides, RealPoly, Variant};

/// Builds (P, Q, R, S) making every point of `bad_at` a bad number: with
/// Q = S = prod (X - c), pick R = Q*T - P so that P S_c + Q_c R vanishes to
/// order exactly 1 at each c.
fn bad_quadruple(
    r: &mut ChaCha8Rng,
    bad_at: &[rectwind::Rational],
) -> (RealPoly, RealPoly, RealPoly, RealPoly) {
    let q = RealPoly::from_roots(bad_at);
    loop {
        let p = common::rand_poly_upto(r, 3);
        let t = common::rand_poly_upto(r, 2);
        if bad_at
            .iter()
            .all(|c| !p.eval(c).is_zero() && !t.eval(c).is_zero())
        {
            let rr = &(&q * &t) - &p;
            if bad_at.iter().all(|c| !rr.eval(c).is_zero()) {
                return (p, q.clone(), rr, q);
            }
        }
    }
}

#[test]
fn aux_product_formula_all_variants() {
    let mut r = common::rng(0x2201);
    let mut seen = [0usize; 4];

    for case in 0..500 {
        let (a, b) = common::rand_interval(&mut r);
        let (p, q, rr, s) = match case % 4 {
            0 => (
                common::rand_poly_upto(&mut r, 4),
                common::rand_poly_upto(&mut r, 4),
                common::rand_poly_upto(&mut r, 4),
                common::rand_poly_upto(&mut r, 4),
            ),
            1 => bad_quadruple(&mut r, &[a.clone()]),
            2 => bad_quadruple(&mut r, &[b.clone()]),
            _ => bad_quadruple(&mut r, &[a.clone(), b.clone()]),
        };
        let (lhs, rhs, variant) = match aux_product_sides(&p, &q, &rr, &s, &a, &b) {
            Ok(v) => v,
            Err(_) => continue, // degenerate random draw (all-zero pair)
        };
        assert_eq!(
            lhs, rhs,
            "case {} ({}): P = {}, Q = {}, R = {}, S = {} on [{}, {}]",
            case,
            variant.tag(),
            p,
            q,
            rr,
            s,
            a,
            b
        );
        seen[match variant {
            Variant::NeitherBad => 0,
            Variant::ABad => 1,
            Variant::BBad => 2,
            Variant::BothBad => 3,
        }] += 1;
    }

    assert!(
        seen.iter().all(|&n| n > 0),
        "not all variants exercised: {:?}",
        seen
    );
    // The targeted constructions must actually land in their variants.
    assert!(seen[1] >= 100 && seen[2] >= 100 && seen[3] >= 100, "{:?}", seen);
}

#[test]
fn degenerate_zero_branches() {
    let mut r = common::rng(0x2202);
    for _ in 0..50 {
        let (a, b) = common::rand_interval(&mut r);
        let p = common::rand_poly_upto(&mut r, 3);
        let q = common::rand_poly_upto(&mut r, 3);
        let zero = RealPoly::zero();

        for (pp, qq, rr, ss) in [
            (zero.clone(), p.clone(), q.clone(), p.clone()),
            (p.clone(), zero.clone(), q.clone(), p.clone()),
            (p.clone(), q.clone(), zero.clone(), p.clone()),
            (p.clone(), q.clone(), p.clone(), zero.clone()),
            // PS + QR = 0 via R = -P, S = Q
            (p.clone(), q.clone(), -&p, q.clone()),
        ] {
            if (pp.is_zero() && qq.is_zero()) || (rr.is_zero() && ss.is_zero()) {
                continue;
            }
            let (lhs, rhs, _) = aux_product_sides(&pp, &qq, &rr, &ss, &a, &b).unwrap();
            assert_eq!(lhs, rhs, "P={}, Q={}, R={}, S={}", pp, qq, rr, ss);
        }
    }
}
