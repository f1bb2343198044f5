//! Combinatorial equivalence of polytopes via vertex-facet incidences.
//!
//! Two polytopes are combinatorially equivalent iff some vertex bijection
//! carries the facet vertex sets of one exactly onto those of the other
//! (face lattices are determined by these incidences).  The search is a
//! refinement-pruned backtracking; instances in this crate are small, so
//! clarity wins over asymptotics.

use super::Polytope;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

/// Equality of facet systems under the identity labelling (both polytopes
/// use the same vertex index space).
pub fn same_labeled_facets(a: &[BTreeSet<usize>], b: &[BTreeSet<usize>]) -> bool {
    let sa: BTreeSet<&BTreeSet<usize>> = a.iter().collect();
    let sb: BTreeSet<&BTreeSet<usize>> = b.iter().collect();
    a.len() == b.len() && sa == sb
}

/// Combinatorial equivalence of two polytopes.
pub fn combinatorially_equivalent(p: &Polytope, q: &Polytope) -> bool {
    p.dim() == q.dim()
        && isomorphic(
            p.vertices().len(),
            p.facet_vertex_sets(),
            q.vertices().len(),
            q.facet_vertex_sets(),
        )
}

/// Does a vertex bijection exist mapping facet system `a` onto `b`?
pub fn isomorphic(
    nva: usize,
    a: &[BTreeSet<usize>],
    nvb: usize,
    b: &[BTreeSet<usize>],
) -> bool {
    if nva != nvb || a.len() != b.len() {
        return false;
    }
    let ca = stable_colors(nva, a);
    let cb = stable_colors(nvb, b);
    if class_sizes(&ca) != class_sizes(&cb) {
        return false;
    }

    // Backtrack over vertices of A, rarest color classes first.
    let mut order: Vec<usize> = (0..nva).collect();
    let sizes = class_sizes(&ca);
    order.sort_by_key(|&v| (sizes[&ca[v]], ca[v], v));
    let mut map: Vec<Option<usize>> = vec![None; nva];
    let mut used = vec![false; nvb];
    search(&mut map, &mut used, 0, &order, &ca, &cb, a, b)
}

fn search(
    map: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    k: usize,
    order: &[usize],
    ca: &[u64],
    cb: &[u64],
    a: &[BTreeSet<usize>],
    b: &[BTreeSet<usize>],
) -> bool {
    if k == order.len() {
        let image: BTreeSet<BTreeSet<usize>> = a
            .iter()
            .map(|f| f.iter().map(|&v| map[v].unwrap()).collect())
            .collect();
        let target: BTreeSet<BTreeSet<usize>> = b.iter().cloned().collect();
        return image == target;
    }
    let v = order[k];
    for w in 0..used.len() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        map[v] = Some(w);
        used[w] = true;
        if facets_still_matchable(map, a, b) && search(map, used, k + 1, order, ca, cb, a, b) {
            return true;
        }
        map[v] = None;
        used[w] = false;
    }
    false
}

/// Every facet of `a` must still have at least one compatible facet of `b`
/// under the partial vertex map, and vice versa.
fn facets_still_matchable(
    map: &[Option<usize>],
    a: &[BTreeSet<usize>],
    b: &[BTreeSet<usize>],
) -> bool {
    let mut hits_b = vec![false; b.len()];
    for fa in a {
        let mut any = false;
        for (j, fb) in b.iter().enumerate() {
            if fa.len() == fb.len() && compatible(map, fa, fb) {
                any = true;
                hits_b[j] = true;
            }
        }
        if !any {
            return false;
        }
    }
    hits_b.into_iter().all(|x| x)
}

fn compatible(map: &[Option<usize>], fa: &BTreeSet<usize>, fb: &BTreeSet<usize>) -> bool {
    for (v, img) in map.iter().enumerate() {
        if let Some(w) = img {
            if fa.contains(&v) != fb.contains(w) {
                return false;
            }
        }
    }
    true
}

/// Iterated color refinement on the vertex-facet bipartite structure.
/// Vertices get colors; facets get colors from their size and vertex colors;
/// vertex colors are refined by the multiset of incident facet colors, until
/// the partition stabilizes.  Colors are comparable across the two inputs
/// because they are assigned from the sorted signature table.
fn stable_colors(nv: usize, facets: &[BTreeSet<usize>]) -> Vec<u64> {
    let mut vcol = vec![0u64; nv];
    for _ in 0..=nv {
        // facet signatures from vertex colors
        let fsig: Vec<Vec<u64>> = facets
            .iter()
            .map(|f| {
                let mut s: Vec<u64> = f.iter().map(|&v| vcol[v]).collect();
                s.sort_unstable();
                s.insert(0, f.len() as u64);
                s
            })
            .collect();
        let ftable: BTreeMap<&Vec<u64>, u64> = fsig
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .zip(0u64..)
            .map(|(s, i)| (s, i))
            .collect();
        let fcol: Vec<u64> = fsig.iter().map(|s| ftable[s]).collect();
        // vertex signatures from incident facet colors
        let vsig: Vec<Vec<u64>> = (0..nv)
            .map(|v| {
                let mut s: Vec<u64> = facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.contains(&v))
                    .map(|(i, _)| fcol[i])
                    .collect();
                s.sort_unstable();
                s.insert(0, vcol[v]);
                s
            })
            .collect();
        let vtable: BTreeMap<&Vec<u64>, u64> = vsig
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .zip(0u64..)
            .map(|(s, i)| (s, i))
            .collect();
        let new: Vec<u64> = vsig.iter().map(|s| vtable[s]).collect();
        if new == vcol {
            break;
        }
        vcol = new;
    }
    vcol
}

fn class_sizes(colors: &[u64]) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for &c in colors {
        *m.entry(c).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn sets(xs: &[&[usize]]) -> Vec<BTreeSet<usize>> {
        xs.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn relabeled_tetrahedra_match() {
        let a = sets(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let b = sets(&[&[3, 2, 1], &[3, 2, 0], &[3, 1, 0], &[2, 1, 0]]);
        assert!(isomorphic(4, &a, 4, &b));
        assert!(same_labeled_facets(&a, &b)); // same sets, order ignored
    }

    #[test]
    fn pyramid_vs_bipyramid() {
        let pyramid = sets(&[&[0, 1, 2, 3], &[0, 1, 4], &[1, 2, 4], &[2, 3, 4], &[0, 3, 4]]);
        let bipyramid = sets(&[
            &[0, 1, 3],
            &[1, 2, 3],
            &[0, 2, 3],
            &[0, 1, 4],
            &[1, 2, 4],
            &[0, 2, 4],
        ]);
        assert!(!isomorphic(5, &pyramid, 5, &bipyramid));
    }

    #[test]
    fn cube_as_point_sets() {
        let pts: Vec<Vec<_>> = (0..8)
            .map(|m| (0..3).map(|i| int(if m >> i & 1 == 1 { 1 } else { 0 })).collect())
            .collect();
        let p = Polytope::hull(&pts).unwrap();
        // a stretched, sheared copy
        let pts2: Vec<Vec<_>> = pts
            .iter()
            .map(|v| {
                vec![
                    &v[0] * int(3) + &v[1],
                    &v[1] * int(2),
                    v[2].clone() - &v[0],
                ]
            })
            .collect();
        let q = Polytope::hull(&pts2).unwrap();
        assert!(combinatorially_equivalent(&p, &q));
        // but not to the octahedron (its polar)
        let half = crate::rat::frac(-1, 2);
        let oct = p
            .translate(&[half.clone(), half.clone(), half])
            .polar()
            .unwrap();
        assert!(!combinatorially_equivalent(&p, &oct));
        assert!(combinatorially_equivalent(&p, &oct.polar().unwrap()));
    }

    #[test]
    fn different_sizes_fail_fast() {
        let a = sets(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let b = sets(&[&[0, 1, 2]]);
        assert!(!isomorphic(4, &a, 4, &b));
        assert!(!isomorphic(4, &a, 5, &a));
    }
}
