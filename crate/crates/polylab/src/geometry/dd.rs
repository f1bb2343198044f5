//! Extreme rays of a pointed polyhedral cone, by the incremental double
//! description method in exact rational arithmetic.
//!
//! This single kernel drives both directions of the representation
//! conversion for polytopes: facets of a convex hull are the extreme rays of
//! the cone dual to the homogenized points, and vertices of an inequality
//! system are the extreme rays of its homogenization cone.

use super::GeometryError;
use crate::linalg;
use crate::rat::{self, Rat};
use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

/// Fixed-width bitset over row indices; all sets in one run share a width.
type Bits = Vec<u64>;

fn bit_on(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn count(a: &Bits) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

fn is_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Computes the extreme rays of the cone `{ y in R^dim : row . y >= 0 }`.
///
/// The cone must be pointed (contain no line), which holds iff the rows span
/// `R^dim`; otherwise [`GeometryError::NotPointed`] is returned.  Rays are
/// normalized to primitive integer vectors and returned sorted, so the
/// output is canonical.
///
/// Each ray carries the bitset of processed rows it satisfies with equality.
/// These sets can be maintained incrementally: a ray created from rays `p`
/// and `q` is a positive combination of them, and since every processed row
/// is nonnegative on both, it vanishes on the combination exactly when it
/// vanishes on both.  Adjacency of `p` and `q` is tested combinatorially
/// (no third ray's set may contain `common = tight(p) & tight(q)`), which
/// for pointed cones is equivalent to the rank condition on `common`.
pub fn extreme_rays(rows: &[Vec<Rat>], dim: usize) -> Result<Vec<Vec<Rat>>, GeometryError> {
    debug_assert!(rows.iter().all(|r| r.len() == dim));
    if linalg::rank(rows) < dim {
        return Err(GeometryError::NotPointed);
    }
    let words = rows.len().div_ceil(64).max(1);

    // Seed with dim linearly independent rows; the extreme rays of
    // { y : B y >= 0 } are the columns of B^{-1}.  Column j is tight on
    // every seed row but the j-th (B B^{-1} = I).
    let mut base: Vec<Vec<Rat>> = Vec::with_capacity(dim);
    let mut base_idx: BTreeSet<usize> = BTreeSet::new();
    for (i, row) in rows.iter().enumerate() {
        if base.len() == dim {
            break;
        }
        base.push(row.clone());
        if linalg::rank(&base) == base.len() {
            base_idx.insert(i);
        } else {
            base.pop();
        }
    }
    let inv = linalg::invert(&base).expect("rows chosen linearly independent");
    let base_order: Vec<usize> = base_idx.iter().copied().collect();
    let mut rays: Vec<(Vec<Rat>, Bits)> = (0..dim)
        .map(|j| {
            let ray = rat::primitive(&(0..dim).map(|i| inv[i][j].clone()).collect::<Vec<_>>());
            let mut tight = vec![0u64; words];
            for (k, &i) in base_order.iter().enumerate() {
                if k != j {
                    bit_on(&mut tight, i);
                }
            }
            (ray, tight)
        })
        .collect();

    // Insert the remaining constraints one at a time.
    for (i, row) in rows.iter().enumerate() {
        if base_idx.contains(&i) {
            continue;
        }
        let vals: Vec<Rat> = rays.iter().map(|(r, _)| linalg::dot(row, r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for ((_, tight), v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    bit_on(tight, i);
                }
            }
            continue;
        }

        let mut created: BTreeMap<Vec<Rat>, Bits> = BTreeMap::new();
        for p in 0..rays.len() {
            if !vals[p].is_positive() {
                continue;
            }
            for q in 0..rays.len() {
                if !vals[q].is_negative() {
                    continue;
                }
                let common = and(&rays[p].1, &rays[q].1);
                if count(&common) < dim.saturating_sub(2) {
                    continue;
                }
                if (0..rays.len())
                    .any(|t| t != p && t != q && is_subset(&common, &rays[t].1))
                {
                    continue;
                }
                let ray: Vec<Rat> = (0..dim)
                    .map(|k| &vals[p] * &rays[q].0[k] - &vals[q] * &rays[p].0[k])
                    .collect();
                let mut tight = common;
                bit_on(&mut tight, i);
                created.insert(rat::primitive(&ray), tight);
            }
        }

        let mut next: Vec<(Vec<Rat>, Bits)> = rays
            .into_iter()
            .zip(vals.iter())
            .filter(|(_, v)| !v.is_negative())
            .map(|((r, mut tight), v)| {
                if v.is_zero() {
                    bit_on(&mut tight, i);
                }
                (r, tight)
            })
            .collect();
        next.extend(created);
        rays = next;
    }

    let mut out: Vec<Vec<Rat>> = rays.into_iter().map(|(r, _)| r).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn orthant_rays() {
        let rows = [v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])];
        let rays = extreme_rays(&rows, 3).unwrap();
        assert_eq!(rays, alloc::vec![v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[1, 0, 0])]);
    }

    #[test]
    fn square_cone_has_four_rays() {
        // cone over a square: y0 >= |y1|, y0 >= |y2|
        let rows = [
            v(&[1, 1, 0]),
            v(&[1, -1, 0]),
            v(&[1, 0, 1]),
            v(&[1, 0, -1]),
        ];
        let rays = extreme_rays(&rows, 3).unwrap();
        assert_eq!(rays.len(), 4);
        for r in &rays {
            assert_eq!(r[0], int(1));
            assert_eq!(r[1].clone().abs(), int(1));
            assert_eq!(r[2].clone().abs(), int(1));
        }
    }

    #[test]
    fn redundant_rows_change_nothing() {
        let rows = [
            v(&[1, 1, 0]),
            v(&[1, -1, 0]),
            v(&[1, 0, 1]),
            v(&[1, 0, -1]),
            v(&[5, 1, 1]), // implied by the first four
        ];
        let rays = extreme_rays(&rows, 3).unwrap();
        assert_eq!(rays.len(), 4);
    }

    #[test]
    fn non_pointed_cone_is_rejected() {
        // halfspace in R^2 contains the line y1 = 0
        let rows = [v(&[1, 0])];
        assert!(matches!(
            extreme_rays(&rows, 2),
            Err(GeometryError::NotPointed)
        ));
    }

    #[test]
    fn mixed_signs_collapse_to_origin() {
        // y >= 0 and -y >= 0 in R^1: the cone is {0}, no rays
        let rows = [v(&[1]), v(&[-1])];
        assert_eq!(extreme_rays(&rows, 1).unwrap().len(), 0);
    }
}
