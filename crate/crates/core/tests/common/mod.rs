//! Shared random generators for the property suites. Everything is seeded so
//! failures reproduce.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rectwind::oracle::{RootKind, RootSpec};
use rectwind::scalars::{rat, GaussianRational};
use rectwind::{Rational, RealPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_rat(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-6..=6), r.gen_range(1..=4))
}

pub fn rand_nonzero_rat(r: &mut ChaCha8Rng) -> Rational {
    let mut n = r.gen_range(-6..=6i64);
    if n == 0 {
        n = 1;
    }
    rat(n, r.gen_range(1..=4))
}

/// Random polynomial of degree exactly `deg` with small rational coefficients.
pub fn rand_poly(r: &mut ChaCha8Rng, deg: usize) -> RealPoly {
    let mut coeffs: Vec<Rational> = (0..deg).map(|_| rand_rat(r)).collect();
    coeffs.push(rand_nonzero_rat(r));
    RealPoly::new(coeffs)
}

/// Random nonzero polynomial of degree at most `max_deg`.
pub fn rand_poly_upto(r: &mut ChaCha8Rng, max_deg: usize) -> RealPoly {
    let deg = r.gen_range(0..=max_deg);
    rand_poly(r, deg)
}

/// Random ordered pair a < b of small rationals.
pub fn rand_interval(r: &mut ChaCha8Rng) -> (Rational, Rational) {
    loop {
        let a = rand_rat(r);
        let b = rand_rat(r);
        if a < b {
            return (a, b);
        }
        if b < a {
            return (b, a);
        }
    }
}

/// A pool of points in all four classes relative to the unit square.
pub fn point_pool() -> Vec<GaussianRational> {
    let g = |re: Rational, im: Rational| GaussianRational::new(re, im);
    vec![
        // interior
        g(rat(1, 2), rat(1, 2)),
        g(rat(1, 3), rat(2, 3)),
        g(rat(3, 4), rat(1, 4)),
        // edges
        g(rat(1, 2), rat(0, 1)),
        g(rat(1, 1), rat(1, 3)),
        g(rat(2, 3), rat(1, 1)),
        g(rat(0, 1), rat(3, 4)),
        // vertices
        g(rat(0, 1), rat(0, 1)),
        g(rat(1, 1), rat(1, 1)),
        // exterior
        g(rat(5, 2), rat(1, 2)),
        g(rat(-1, 1), rat(-1, 1)),
        g(rat(1, 2), rat(3, 1)),
    ]
}

/// Random spec set over the pool with total degree at most `max_total`.
/// Locations are distinct across the whole set, so zero/pole overlap cannot
/// occur.
pub fn rand_specs(r: &mut ChaCha8Rng, max_total: u32, allow_boundary: bool) -> Vec<RootSpec> {
    let mut pool = point_pool();
    if !allow_boundary {
        pool = pool
            .into_iter()
            .enumerate()
            .filter(|(i, _)| *i < 3 || *i >= 9)
            .map(|(_, p)| p)
            .collect();
    }
    let mut specs = Vec::new();
    let mut budget = max_total;
    let n = r.gen_range(1..=4usize);
    for _ in 0..n {
        if budget == 0 || pool.is_empty() {
            break;
        }
        let loc = pool.swap_remove(r.gen_range(0..pool.len()));
        let m = r.gen_range(1..=budget.min(4));
        budget -= m;
        let kind = if r.gen_bool(0.3) {
            RootKind::Pole
        } else {
            RootKind::Zero
        };
        specs.push(RootSpec {
            location: loc,
            multiplicity: m,
            kind,
        });
    }
    if specs.is_empty() {
        specs.push(RootSpec::zero(point_pool()[0].clone(), 1));
    }
    specs
}
