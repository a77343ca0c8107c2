//! Exact real-root isolation with Sturm sequences and bisection refinement.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::real::RealPoly;
use crate::scalars::{rat, Rational};

/// A real algebraic number, represented as a square-free defining polynomial
/// plus an isolating interval. Rational roots are stored with a collapsed
/// interval `lo == hi`.
#[derive(Clone, Debug)]
pub struct AlgebraicRoot {
    defining: RealPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicRoot {
    pub fn exact(defining: RealPoly, value: Rational) -> Self {
        debug_assert!(defining.eval(&value).is_zero());
        AlgebraicRoot {
            defining,
            lo: value.clone(),
            hi: value,
        }
    }

    fn interval(defining: RealPoly, lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo < hi);
        debug_assert!(!defining.eval(&lo).is_zero());
        debug_assert!(!defining.eval(&hi).is_zero());
        debug_assert!(defining.sign_at(&lo) * defining.sign_at(&hi) < 0);
        AlgebraicRoot { defining, lo, hi }
    }

    pub fn defining(&self) -> &RealPoly {
        &self.defining
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The exact rational value, when known.
    pub fn value(&self) -> Option<&Rational> {
        if self.is_exact() {
            Some(&self.lo)
        } else {
            None
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Halves the isolating interval (keeping the same root); collapses to an
    /// exact value when the bisection midpoint hits the root.
    pub fn refine(&self) -> Self {
        let mut r = self.clone();
        r.refine_in_place();
        r
    }

    pub fn refine_in_place(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = (&self.lo + &self.hi) / rat(2, 1);
        let sm = self.defining.sign_at(&mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
        } else if sm * self.defining.sign_at(&self.lo) < 0 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Refines until the interval lies strictly inside `(a, b)`. The root
    /// itself must lie strictly inside already.
    pub fn shrink_within(&mut self, a: &Rational, b: &Rational) {
        while !(&self.lo > a && &self.hi < b) {
            self.refine_in_place();
        }
    }

    /// Sign of another polynomial `p` at this root, decided exactly. `p` must
    /// not share the root (callers remove shared factors with gcd first).
    pub fn sign_of(&self, p: &RealPoly) -> i32 {
        if let Some(v) = self.value() {
            return p.sign_at(v);
        }
        let mut r = self.clone();
        loop {
            if let Some(v) = r.value() {
                return p.sign_at(v);
            }
            let sl = p.sign_at(&r.lo);
            let sh = p.sign_at(&r.hi);
            if sl == sh && sl != 0 {
                return sl;
            }
            r.refine_in_place();
        }
    }
}

/// Sturm chain of a square-free polynomial.
struct SturmChain {
    chain: Vec<RealPoly>,
}

impl SturmChain {
    fn new(square_free: &RealPoly) -> Self {
        // Elements are normalized to primitive form; only signs matter.
        let mut chain = vec![square_free.primitive(), square_free.derivative().primitive()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push((-&r).primitive());
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in the open interval `(a, b)`.
    fn count_open(&self, p: &RealPoly, a: &Rational, b: &Rational) -> usize {
        // variations difference counts roots in (a, b]
        let in_half_open = self.variations_at(a) - self.variations_at(b);
        if p.eval(b).is_zero() {
            in_half_open - 1
        } else {
            in_half_open
        }
    }
}

/// Isolates the distinct real roots of `p` in the open interval `(a, b)`,
/// ordered left to right. Multiplicities are not reported; every root gets
/// exactly one interval strictly inside `(a, b)`.
pub fn isolate_real_roots(p: &RealPoly, a: &Rational, b: &Rational) -> Result<Vec<AlgebraicRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Ok(Vec::new());
    }
    let sf = p.square_free()?;
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&sf);
    let mut out = Vec::new();
    isolate_rec(&sf, &chain, a, b, &mut out);
    for r in &mut out {
        r.shrink_within(a, b);
    }
    Ok(out)
}

fn isolate_rec(
    sf: &RealPoly,
    chain: &SturmChain,
    lo: &Rational,
    hi: &Rational,
    out: &mut Vec<AlgebraicRoot>,
) {
    let n = chain.count_open(sf, lo, hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(single_root(sf, chain, lo.clone(), hi.clone()));
        return;
    }
    let mid = (lo + hi) / rat(2, 1);
    isolate_rec(sf, chain, lo, &mid, out);
    if sf.eval(&mid).is_zero() {
        out.push(AlgebraicRoot::exact(sf.clone(), mid.clone()));
    }
    isolate_rec(sf, chain, &mid, hi, out);
}

// Exactly one root in (lo, hi); shrink until the endpoints are nonroots with
// a sign change between them, so the interval stands on its own.
fn single_root(sf: &RealPoly, chain: &SturmChain, mut lo: Rational, mut hi: Rational) -> AlgebraicRoot {
    loop {
        let sl = sf.sign_at(&lo);
        let sh = sf.sign_at(&hi);
        if sl != 0 && sh != 0 && sl != sh {
            return AlgebraicRoot::interval(sf.clone(), lo, hi);
        }
        let mid = (&lo + &hi) / rat(2, 1);
        if sf.eval(&mid).is_zero() {
            return AlgebraicRoot::exact(sf.clone(), mid);
        }
        if chain.count_open(sf, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Refines the given roots (assumed pairwise distinct as real numbers) until
/// their intervals are strictly disjoint and strictly ordered. The slice must
/// already be sorted by root value; this is guaranteed when merging per-poly
/// isolation outputs with `merge_sorted_roots`.
pub fn separate_strictly(roots: &mut [AlgebraicRoot]) {
    for i in 1..roots.len() {
        let (left, right) = roots.split_at_mut(i);
        let prev = &mut left[i - 1];
        let cur = &mut right[0];
        while prev.hi() >= cur.lo() {
            if !prev.is_exact() {
                prev.refine_in_place();
            }
            if !cur.is_exact() {
                cur.refine_in_place();
            }
        }
    }
}

/// Compares two roots known to be distinct real numbers, refining as needed.
pub fn compare_roots(a: &mut AlgebraicRoot, b: &mut AlgebraicRoot) -> std::cmp::Ordering {
    loop {
        if a.hi() < b.lo() {
            return std::cmp::Ordering::Less;
        }
        if b.hi() < a.lo() {
            return std::cmp::Ordering::Greater;
        }
        if a.is_exact() && b.is_exact() {
            return a.lo().cmp(b.lo());
        }
        a.refine_in_place();
        b.refine_in_place();
    }
}

/// Merges root lists (each sorted, all underlying roots pairwise distinct)
/// into one sorted list of `(root, tag)` pairs.
pub fn merge_sorted_roots<T: Clone>(
    lists: Vec<(Vec<AlgebraicRoot>, T)>,
) -> Vec<(AlgebraicRoot, T)> {
    let mut all: Vec<(AlgebraicRoot, T)> = lists
        .into_iter()
        .flat_map(|(roots, tag)| roots.into_iter().map(move |r| (r, tag.clone())))
        .collect();
    // insertion sort with exact comparisons; lists are tiny
    for i in 1..all.len() {
        let mut j = i;
        while j > 0 {
            let (left, right) = all.split_at_mut(j);
            let ord = compare_roots(&mut left[j - 1].0, &mut right[0].0);
            if ord == std::cmp::Ordering::Greater {
                all.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    all
}

/// True when `p` has a real root in the closed interval `[a, b]`.
pub fn has_root_closed(p: &RealPoly, a: &Rational, b: &Rational) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a > b {
        return Ok(false);
    }
    if p.eval(a).is_zero() || p.eval(b).is_zero() {
        return Ok(true);
    }
    if a == b {
        return Ok(false);
    }
    Ok(!isolate_real_roots(p, a, b)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, sign};

    #[test]
    fn sqrt2_isolated() {
        let p = RealPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p, &int(0), &int(2)).unwrap();
        assert_eq!(roots.len(), 1);
        let mut r = roots[0].clone();
        for _ in 0..10 {
            r.refine_in_place();
        }
        assert!(r.lo() < &rat(3, 2) && r.hi() > &rat(7, 5));
        assert!(sign(&(r.lo() * r.lo() - int(2))) < 0 || r.is_exact());
    }

    #[test]
    fn exact_rational_root() {
        let p = RealPoly::from_ints(&[0, 0, 1]); // X^2
        let roots = isolate_real_roots(&p, &int(-1), &int(1)).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].value(), Some(&int(0)));
    }

    #[test]
    fn no_real_roots() {
        let p = RealPoly::from_ints(&[1, 0, 1]); // X^2 + 1
        assert!(isolate_real_roots(&p, &int(-10), &int(10)).unwrap().is_empty());
    }

    #[test]
    fn refinement_halves_width() {
        let p = RealPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p, &int(1), &int(2)).unwrap();
        let r = roots[0].clone();
        let refined = r.refine();
        assert!(refined.is_exact() || refined.width() == r.width() / int(2));
    }

    #[test]
    fn isolation_of_known_linear_factors() {
        let p = RealPoly::from_roots(&[int(-1), rat(1, 3), int(2)]);
        let roots = isolate_real_roots(&p, &int(-5), &int(5)).unwrap();
        assert_eq!(roots.len(), 3);
        for (root, expected) in roots.iter().zip([int(-1), rat(1, 3), int(2)]) {
            let mut r = root.clone();
            while !r.is_exact() && r.width() > rat(1, 1000) {
                r.refine_in_place();
            }
            assert!(r.lo() <= &expected && &expected <= r.hi());
        }
    }

    #[test]
    fn boundary_roots_excluded() {
        let p = RealPoly::from_roots(&[int(0), int(1), int(2)]);
        let roots = isolate_real_roots(&p, &int(0), &int(2)).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].value(), Some(&int(1)));
    }

    #[test]
    fn closed_interval_root_query() {
        let p = RealPoly::from_roots(&[int(1)]);
        assert!(has_root_closed(&p, &int(0), &int(1)).unwrap());
        assert!(has_root_closed(&p, &int(1), &int(2)).unwrap());
        assert!(!has_root_closed(&p, &int(2), &int(3)).unwrap());
    }
}
