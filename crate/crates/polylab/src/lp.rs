//! Exact linear-programming feasibility.
//!
//! A single entry point covers every feasibility question in this crate:
//! [`feasible_point`] decides whether `{ x >= 0 : A x = b }` is nonempty and
//! produces a witness.  It is a phase-1 simplex over exact rationals with
//! Bland's rule, so it terminates deterministically on every input.
//! Callers encode their questions in this form (positive dependencies,
//! Farkas certificates, ...).

use crate::rat::Rat;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

/// Returns some `x >= 0` with `A x = b`, or `None` if no such `x` exists.
///
/// `a` is a list of `m` rows of equal length `n`.  Runs phase-1 simplex with
/// artificial variables and Bland's anti-cycling rule; exact arithmetic makes
/// the zero test at the end meaningful.
pub fn feasible_point(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    assert_eq!(b.len(), m);
    let n = if m == 0 { 0 } else { a[0].len() };
    if m == 0 {
        return Some(Vec::new());
    }

    // Tableau rows: [ A | I | b ] with b >= 0 after sign normalization.
    let total = n + m;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        assert_eq!(a[i].len(), n);
        let flip = b[i].is_negative();
        let mut row: Vec<Rat> = a[i]
            .iter()
            .map(|x| if flip { -x.clone() } else { x.clone() })
            .collect();
        for j in 0..m {
            row.push(if i == j { Rat::from_integer(1.into()) } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..total).collect();

    // Objective: minimize the sum of artificials.  Reduced-cost row starts as
    // minus the sum of constraint rows, with artificial columns zeroed.
    let mut obj = vec![Rat::zero(); total + 1];
    for row in &t {
        for j in 0..=total {
            obj[j] -= &row[j];
        }
    }
    for x in obj.iter_mut().take(total).skip(n) {
        *x = Rat::zero();
    }

    loop {
        // Bland: entering variable = smallest index with negative reduced cost.
        let Some(enter) = (0..total).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Ratio test, ties broken by smallest basis index (Bland).
        let mut pivot: Option<(Rat, usize)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][total] / &t[i][enter];
                let better = match &pivot {
                    None => true,
                    Some((r, pi)) => ratio < *r || (ratio == *r && basis[i] < basis[*pi]),
                };
                if better {
                    pivot = Some((ratio, i));
                }
            }
        }
        // Phase-1 objective is bounded below by 0, so a pivot always exists.
        let (_, pr) = pivot.expect("phase-1 simplex column is improvable");
        let inv = t[pr][enter].clone();
        for x in t[pr].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..m {
            if i != pr && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..=total {
                    let sub = &f * &t[pr][j];
                    t[i][j] = &t[i][j] - &sub;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..=total {
                let sub = &f * &t[pr][j];
                obj[j] = &obj[j] - &sub;
            }
        }
        basis[pr] = enter;
    }

    // Optimal value is -obj[total]; feasible iff all artificials vanished.
    if !obj[total].is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][total].clone();
        } else {
            debug_assert!(t[i][total].is_zero());
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::dot;
    use crate::rat::int;

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rat>> {
        data.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn feasible_system() {
        // x0 + x1 = 2, x0 - x1 = 0  ->  x = (1, 1)
        let a = rows(&[&[1, 1], &[1, -1]]);
        let b = [int(2), int(0)];
        let x = feasible_point(&a, &b).unwrap();
        for (row, rhs) in a.iter().zip(&b) {
            assert_eq!(dot(row, &x), *rhs);
        }
        assert!(x.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn infeasible_system() {
        // x0 + x1 = -1 has no nonnegative solution.
        let a = rows(&[&[1, 1]]);
        assert!(feasible_point(&a, &[int(-1)]).is_none());
        // x0 = 1 and x0 = 2 simultaneously.
        let a = rows(&[&[1], &[1]]);
        assert!(feasible_point(&a, &[int(1), int(2)]).is_none());
    }

    #[test]
    fn degenerate_and_empty() {
        assert_eq!(feasible_point(&[], &[]), Some(alloc::vec![]));
        // 0 = 0 row is fine; 0 = 1 is not.
        let a = rows(&[&[0, 0]]);
        assert!(feasible_point(&a, &[int(0)]).is_some());
        assert!(feasible_point(&a, &[int(1)]).is_none());
    }
}
