//! Certified complex root isolation by rectangle subdivision, with W as the
//! counting oracle.
//!
//! The engine keeps a work set of boxes with known integer root counts. A box
//! is split through its midpoint; cut lines that would pass through a root are
//! detected exactly (by restricting F to the line and isolating real roots)
//! and nudged through a fixed perturbation schedule, so every box boundary
//! ever produced is root-free and every W value is a plain integer.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{has_root_closed, ComplexPoly, RealPoly};
use crate::root_count::count_in;
use crate::scalars::{rat, GaussianRational, Rational};
use crate::winding::Rectangle;

/// A rectangle certified to contain exactly `count` roots of F (with
/// multiplicity) and none on its boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsolatingBox {
    pub rect: Rectangle,
    pub count: u32,
}

/// Cauchy bound: every root of F satisfies |z| < B, with moduli
/// over-approximated by |re| + |im| to stay rational.
pub fn root_bound(f: &ComplexPoly) -> Result<Rational> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::ConstantPolynomial);
    }
    // A rational lower bound on |a_n|: max(|re|, |im|) <= |a_n|.
    let lead = f.leading().unwrap();
    let lead_lb = lead.re.abs().max(lead.im.abs());
    let mut max_ratio = Rational::zero();
    for k in 0..deg {
        let ratio = ComplexPoly::coeff_l1_bound(&f.coeff(k)) / &lead_lb;
        if ratio > max_ratio {
            max_ratio = ratio;
        }
    }
    Ok(rat(1, 1) + max_ratio)
}

/// Does F vanish anywhere on the segment {a + b*t : t in [t0, t1]}? Exact:
/// restricts F to the line and looks for common real roots of the real and
/// imaginary parts.
fn roots_on_segment(
    f: &ComplexPoly,
    a: &GaussianRational,
    b: &GaussianRational,
    t0: &Rational,
    t1: &Rational,
) -> bool {
    let (re, im) = f.subst_linear(a, b).split_re_im();
    let common = if re.is_zero() {
        im
    } else if im.is_zero() {
        re
    } else {
        RealPoly::gcd(&re, &im).unwrap()
    };
    if common.degree() == Some(0) {
        return false;
    }
    // common = 0 would mean F vanishes on a whole line; impossible for F != 0.
    has_root_closed(&common, t0, t1).unwrap()
}

fn vertical_line_is_clear(f: &ComplexPoly, x: &Rational, rect: &Rectangle) -> bool {
    !roots_on_segment(
        f,
        &GaussianRational::from_rational(x.clone()),
        &GaussianRational::i(),
        &rect.y0,
        &rect.y1,
    )
}

fn horizontal_line_is_clear(f: &ComplexPoly, y: &Rational, rect: &Rectangle) -> bool {
    !roots_on_segment(
        f,
        &GaussianRational::new(Rational::zero(), y.clone()),
        &GaussianRational::one(),
        &rect.x0,
        &rect.x1,
    )
}

/// Midpoint, then mid + span*(1/3)/2^k alternating signs, until the predicate
/// accepts the cut. Deterministic; terminates because only finitely many
/// coordinates are forbidden.
fn pick_cut(lo: &Rational, hi: &Rational, mut clear: impl FnMut(&Rational) -> bool) -> Rational {
    let mid = (lo + hi) / rat(2, 1);
    if clear(&mid) {
        return mid;
    }
    let span = hi - lo;
    let mut step = &span * rat(1, 3);
    loop {
        for sgn in [1, -1] {
            let c = &mid + &(&step * rat(sgn, 1));
            if lo < &c && &c < hi && clear(&c) {
                return c;
            }
        }
        step = &step / rat(2, 1);
    }
}

fn integer_count(f: &ComplexPoly, rect: &Rectangle) -> u32 {
    let w = count_in(f, rect).expect("nonzero polynomial").value;
    u32::try_from(w.as_integer().expect("root-free boundary gives integer W"))
        .expect("nonnegative root count")
}

/// Isolates every complex root of F into disjoint boxes of width and height
/// below eps, with exact multiplicity counts summing to deg F.
pub fn isolate(f: &ComplexPoly, eps: &Rational) -> Result<Vec<IsolatingBox>> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !(eps > &Rational::zero()) {
        return Err(Error::Precondition("isolation requires eps > 0"));
    }

    let b = root_bound(f)?;
    // The Cauchy bound scales with the coefficients, not the roots, and can
    // be orders of magnitude loose. Before subdividing, shrink to the
    // smallest power-of-two box that still certifies all deg F roots; each
    // probe is one cheap W evaluation on a root-free boundary.
    let mut half = Rational::one();
    let start = loop {
        if half >= b {
            break Rectangle::new(-b.clone(), b.clone(), -b.clone(), b)?;
        }
        let cand = Rectangle::new(-half.clone(), half.clone(), -half.clone(), half.clone())?;
        if vertical_line_is_clear(f, &cand.x0, &cand)
            && vertical_line_is_clear(f, &cand.x1, &cand)
            && horizontal_line_is_clear(f, &cand.y0, &cand)
            && horizontal_line_is_clear(f, &cand.y1, &cand)
            && integer_count(f, &cand) as usize == deg
        {
            break cand;
        }
        half = half * rat(2, 1);
    };
    let total = deg as u32;

    // Work set ordered so the largest box is popped first.
    let mut work = vec![(start, total)];
    let mut done: Vec<IsolatingBox> = Vec::new();
    while let Some(idx) = work
        .iter()
        .enumerate()
        .max_by(|(_, (r1, _)), (_, (r2, _))| {
            r1.width()
                .max(r1.height())
                .cmp(&r2.width().max(r2.height()))
                .then_with(|| r2.x0.cmp(&r1.x0))
                .then_with(|| r2.y0.cmp(&r1.y0))
        })
        .map(|(i, _)| i)
    {
        let (rect, count) = work.swap_remove(idx);
        if count == 0 {
            continue;
        }
        if &rect.width() < eps && &rect.height() < eps {
            done.push(IsolatingBox { rect, count });
            continue;
        }
        let xc = pick_cut(&rect.x0, &rect.x1, |x| vertical_line_is_clear(f, x, &rect));
        let yc = pick_cut(&rect.y0, &rect.y1, |y| horizontal_line_is_clear(f, y, &rect));
        let children = [
            Rectangle::new(rect.x0.clone(), xc.clone(), rect.y0.clone(), yc.clone())?,
            Rectangle::new(xc.clone(), rect.x1.clone(), rect.y0.clone(), yc.clone())?,
            Rectangle::new(rect.x0.clone(), xc.clone(), yc.clone(), rect.y1.clone())?,
            Rectangle::new(xc, rect.x1.clone(), yc, rect.y1.clone())?,
        ];
        // The last child's count follows by subtraction: cut lines and the
        // parent boundary are root-free, so the four counts tile the parent.
        let mut claimed = 0;
        let n = children.len();
        for (k, child) in children.into_iter().enumerate() {
            let c = if k + 1 < n {
                integer_count(f, &child)
            } else {
                count - claimed
            };
            claimed += c;
            if c > 0 {
                work.push((child, c));
            }
        }
        debug_assert_eq!(claimed, count, "subdivision lost roots");
    }

    done.sort_by(|a, b| {
        a.rect
            .x0
            .cmp(&b.rect.x0)
            .then_with(|| a.rect.y0.cmp(&b.rect.y0))
    });
    Ok(done)
}
