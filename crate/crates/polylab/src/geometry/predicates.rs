//! Exact cone and position predicates used by projections and constructions.

use crate::linalg;
use crate::lp;
use crate::rat::Rat;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

/// True iff the vectors positively span `R^m`: they have full rank and some
/// strictly positive combination of them is zero.  Decided exactly by
/// searching for `mu >= 0` with `sum (1 + mu_i) v_i = 0`.
pub fn positively_spans(vecs: &[Vec<Rat>], m: usize) -> bool {
    if m == 0 {
        return true;
    }
    if vecs.is_empty() || linalg::rank(vecs) < m {
        return false;
    }
    let a: Vec<Vec<Rat>> = (0..m)
        .map(|k| vecs.iter().map(|v| v[k].clone()).collect())
        .collect();
    let b: Vec<Rat> = (0..m)
        .map(|k| {
            let mut s = Rat::zero();
            for v in vecs {
                s -= &v[k];
            }
            s
        })
        .collect();
    lp::feasible_point(&a, &b).is_some()
}

/// Sign of `a_0 + a . x` for the halfspace row `(a_0, a)`: the point is
/// *beneath* the facet (inside) when positive, on it when zero, *beyond*
/// (outside) when negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    /// Strictly satisfies the inequality.
    Beneath,
    /// Lies on the hyperplane.
    On,
    /// Strictly violates the inequality.
    Beyond,
}

/// Classifies `x` against the halfspace row `(a_0, a)`.
pub fn position(row: &[Rat], x: &[Rat]) -> Position {
    let v = super::facet_value(row, x);
    if v.is_positive() {
        Position::Beneath
    } else if v.is_zero() {
        Position::On
    } else {
        Position::Beyond
    }
}

/// The parameter interval of points `b + t u` strictly beneath the halfspace
/// row, intersected with the starting interval.  Bounds are exclusive;
/// `None` in a bound means unbounded on that side.  Returns `None` overall
/// if the interval becomes empty (or the whole line violates the
/// constraint).
pub fn clip_line(
    row: &[Rat],
    base: &[Rat],
    dir: &[Rat],
    interval: (Option<Rat>, Option<Rat>),
) -> Option<(Option<Rat>, Option<Rat>)> {
    // value(t) = (a_0 + a.b) + t (a.u)
    let c0 = super::facet_value(row, base);
    let mut c1 = Rat::zero();
    for (a, u) in row[1..].iter().zip(dir) {
        c1 += a * u;
    }
    let (mut lo, mut hi) = interval;
    if c1.is_zero() {
        if c0.is_positive() {
            return Some((lo, hi));
        }
        return None;
    }
    let t = -c0 / &c1;
    if c1.is_positive() {
        // need t > t0
        if lo.as_ref().is_none_or(|l| t > *l) {
            lo = Some(t);
        }
    } else if hi.as_ref().is_none_or(|h| t < *h) {
        hi = Some(t);
    }
    match (&lo, &hi) {
        (Some(l), Some(h)) if l >= h => None,
        _ => Some((lo, hi)),
    }
}

/// A point strictly inside the interval `(lo, hi)`, preferring the midpoint
/// of finite intervals and unit steps into half-infinite ones.
pub fn interval_point(lo: &Option<Rat>, hi: &Option<Rat>) -> Rat {
    match (lo, hi) {
        (Some(l), Some(h)) => (l + h) / crate::rat::int(2),
        (Some(l), None) => l + Rat::one(),
        (None, Some(h)) => h - Rat::one(),
        (None, None) => Rat::zero(),
    }
}
