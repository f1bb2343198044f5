//! Dense linear algebra, exact and floating-point.
//!
//! Matrices are plain `Vec<Vec<_>>` row lists; everything here is meant for
//! the small, dense systems that show up in polytope work (dimensions in the
//! tens, occasionally a few hundred rows).  The exact routines use Gaussian
//! elimination over [`Rat`] with no pivoting heuristics beyond "first nonzero"
//! so results are deterministic; the `f64` solver uses partial pivoting.

use crate::rat::Rat;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Reduced row echelon form in place.  Returns the pivot columns in order.
pub fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    rref(&mut m).len()
}

/// Rank of the affine hull of a point set (0 for a single point).
pub fn affine_rank(points: &[Vec<Rat>]) -> usize {
    let mut rows: Vec<Vec<Rat>> = points
        .iter()
        .map(|p| {
            let mut row = vec![Rat::one()];
            row.extend(p.iter().cloned());
            row
        })
        .collect();
    match rref(&mut rows).len() {
        0 => 0,
        r => r - 1,
    }
}

/// One solution of `A x = b` if the system is consistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.len(), b.len());
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // inconsistent: pivot in the augmented column
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Basis of the right nullspace of a matrix with `cols` columns.
pub fn nullspace(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rat::zero(); cols];
            v[fc] = Rat::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][fc].clone();
            }
            v
        })
        .collect()
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant of a square rational matrix.
pub fn det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(c, p);
            d = -d;
        }
        d = &d * &m[c][c];
        let inv = m[c][c].clone();
        for j in c..n {
            m[c][j] = &m[c][j] / &inv;
        }
        for i in (c + 1)..n {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..n {
                    let sub = &f * &m[c][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
    }
    d
}

/// Dot product of rational vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        s += x * y;
    }
    s
}

/// Solves a dense `f64` system by Gaussian elimination with partial pivoting.
/// Returns `None` when the matrix is numerically singular.
pub fn solve_f64(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| {
            m[i][c].abs()
                .partial_cmp(&m[j][c].abs())
                .unwrap_or(core::cmp::Ordering::Equal)
        })?;
        if m[p][c].abs() < 1e-14 {
            return None;
        }
        m.swap(c, p);
        for i in (c + 1)..n {
            let f = m[i][c] / m[c][c];
            if f != 0.0 {
                for j in c..=n {
                    m[i][j] -= f * m[c][j];
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = m[i][n];
        for j in (i + 1)..n {
            s -= m[i][j] * x[j];
        }
        x[i] = s / m[i][i];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            assert!(dot(row, &ns[0]).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[2, 0], &[0, 4]]);
        let x = solve(&a, &[int(6), int(2)]).unwrap();
        assert_eq!(x, alloc::vec![int(3), frac(1, 2)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&b, &[int(1), int(3)]).is_none());
        assert!(solve(&b, &[int(1), int(2)]).is_some());
    }

    #[test]
    fn invert_and_det() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(det(&a), int(1));
        let inv = invert(&a).unwrap();
        assert_eq!(inv[0], alloc::vec![int(1), int(-1)]);
        assert_eq!(inv[1], alloc::vec![int(-1), int(2)]);
        let sing = m(&[&[1, 2], &[2, 4]]);
        assert!(invert(&sing).is_none());
        assert_eq!(det(&sing), int(0));
    }

    #[test]
    fn affine_rank_of_simplex_and_flat() {
        let pts = m(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(affine_rank(&pts), 3);
        let flat = m(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(affine_rank(&flat), 2);
        assert_eq!(affine_rank(&m(&[&[5, 7]])), 0);
    }

    #[test]
    fn float_solver() {
        let a = alloc::vec![alloc::vec![0.0, 2.0], alloc::vec![3.0, 1.0]];
        let x = solve_f64(&a, &[4.0, 5.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 2.0).abs() < 1e-12);
    }
}
