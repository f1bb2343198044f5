//! Constructions of notable 4-polytopes: hypersimplex, 24-cell, stacked
//! polytopes carrying compatible vertex-cut planes, and the deep vertex
//! truncation (DVT) that produces 2-simplicial 2-simple polytopes.
//!
//! The deep truncation cuts every vertex `v` by a hyperplane `H_v`
//! separating `v` from all other vertices, chosen so that the planes of
//! adjacent vertices meet their common edge *in the same point*.  The
//! truncated polytope then has one vertex per old edge, old facets survive
//! shrunken, and each old vertex contributes its figure as a new facet.
//! Midpoint cuts do this for the simplex and the cross-polytope; for
//! stacked polytopes the planes are carried along the construction: each
//! new apex receives the hyperplane spanned by the points where the old
//! planes cross its fresh edges.

use crate::analysis4d::{Analysis4Error, FlagData4};
use crate::fvector::FVector;
use crate::geometry::{facet_value, predicates, GeometryError, Polytope};
use crate::linalg;
use crate::rat::{self, Rat};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

/// Errors from the constructions in this module.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Construct4Error {
    /// Underlying polytope computation failed.
    #[error("geometry: {0}")]
    Geometry(#[from] GeometryError),
    /// Flag computation failed.
    #[error("flags: {0}")]
    Flags(#[from] Analysis4Error),
    /// The edge cut points at a vertex do not span a hyperplane.
    #[error("cut points at vertex {0} do not determine a hyperplane")]
    CutNotDetermined(usize),
    /// No admissible apex position was found for any facet.
    #[error("no admissible stacking apex")]
    NoApex,
}

/// The simplex `conv{0, e_1, ..., e_d}`.
pub fn simplex(d: usize) -> Polytope {
    let mut pts = vec![vec![Rat::zero(); d]];
    for i in 0..d {
        let mut p = vec![Rat::zero(); d];
        p[i] = rat::int(1);
        pts.push(p);
    }
    Polytope::hull(&pts).expect("simplex points are full-dimensional")
}

/// The cross-polytope `conv{+-e_1, ..., +-e_d}`.
pub fn cross_polytope(d: usize) -> Polytope {
    let mut pts = Vec::with_capacity(2 * d);
    for i in 0..d {
        for s in [1i64, -1] {
            let mut p = vec![Rat::zero(); d];
            p[i] = rat::int(s);
            pts.push(p);
        }
    }
    Polytope::hull(&pts).expect("cross-polytope points are full-dimensional")
}

/// The 4-dimensional hypersimplex slab `{x in [0,1]^4 : 1 <= sum x <= 2}`,
/// the smallest 2-simplicial 2-simple 4-polytope beyond the simplex.
pub fn hypersimplex() -> Polytope {
    let mut rows = Vec::new();
    for i in 0..4 {
        let mut lo = vec![Rat::zero(); 5];
        lo[1 + i] = rat::int(1);
        rows.push(lo); // x_i >= 0
        let mut hi = vec![Rat::zero(); 5];
        hi[0] = rat::int(1);
        hi[1 + i] = rat::int(-1);
        rows.push(hi); // x_i <= 1
    }
    let mut sum_lo = vec![rat::int(-1); 5];
    sum_lo[0] = rat::int(-1);
    for x in sum_lo.iter_mut().skip(1) {
        *x = rat::int(1);
    }
    rows.push(sum_lo); // sum >= 1
    let mut sum_hi = vec![rat::int(-1); 5];
    sum_hi[0] = rat::int(2);
    rows.push(sum_hi); // sum <= 2
    Polytope::from_inequalities(&rows).expect("hypersimplex is bounded and full-dimensional")
}

/// The 24-cell `conv{+-e_i/2 +- e_j/2 : i < j}`.
pub fn cell24() -> Polytope {
    let h = rat::frac(1, 2);
    let mut pts = Vec::with_capacity(24);
    for i in 0..4 {
        for j in i + 1..4 {
            for si in [1i64, -1] {
                for sj in [1i64, -1] {
                    let mut p = vec![Rat::zero(); 4];
                    p[i] = rat::int(si) * &h;
                    p[j] = rat::int(sj) * &h;
                    pts.push(p);
                }
            }
        }
    }
    Polytope::hull(&pts).expect("24-cell points are full-dimensional")
}

/// A polytope together with one vertex-cut hyperplane per vertex.  Rows are
/// `(a_0, a)` for `a_0 + a . x`, oriented negative at the owning vertex and
/// positive at every other vertex, and the planes of adjacent vertices pass
/// through a common point of their edge.
#[derive(Debug, Clone)]
pub struct CutComplex {
    /// The underlying polytope.
    pub poly: Polytope,
    /// One oriented cut row per vertex, aligned with `poly.vertices()`.
    pub cuts: Vec<Vec<Rat>>,
}

/// Builds midpoint cuts: for each vertex the hyperplane through the
/// midpoints of its edges.  Fails unless those midpoints are affinely
/// dependent enough to span exactly one hyperplane that separates the
/// vertex, which holds for simplices and cross-polytopes.
pub fn midpoint_cuts(poly: &Polytope) -> Result<CutComplex, Construct4Error> {
    let d = poly.dim();
    let edges = poly.graph_edges()?;
    let vs = poly.vertices();
    let mut cuts = Vec::with_capacity(vs.len());
    for v in 0..vs.len() {
        let mut rows = Vec::new();
        for &(a, b) in &edges {
            if a == v || b == v {
                let mut row = Vec::with_capacity(d + 1);
                row.push(rat::int(1));
                for k in 0..d {
                    row.push((&vs[a][k] + &vs[b][k]) / rat::int(2));
                }
                rows.push(row);
            }
        }
        let ns = linalg::nullspace(&rows, d + 1);
        if ns.len() != 1 {
            return Err(Construct4Error::CutNotDetermined(v));
        }
        let mut h = rat::primitive(&ns[0]);
        let at_v = facet_value(&h, &vs[v]);
        if at_v.is_zero() {
            return Err(Construct4Error::CutNotDetermined(v));
        }
        if at_v.is_positive() {
            for x in &mut h {
                *x = -&*x;
            }
        }
        for (w, p) in vs.iter().enumerate() {
            if w != v && !facet_value(&h, p).is_positive() {
                return Err(Construct4Error::CutNotDetermined(v));
            }
        }
        cuts.push(h);
    }
    Ok(CutComplex {
        poly: poly.clone(),
        cuts,
    })
}

/// Deep vertex truncation: intersects the polytope with the kept side of
/// every vertex-cut plane.
pub fn dvt(cs: &CutComplex) -> Result<Polytope, Construct4Error> {
    Ok(cs.poly.intersect_halfspaces(&cs.cuts)?)
}

/// Midpoint deep truncation of a polytope (when well-defined).
pub fn dvt_at_midpoints(poly: &Polytope) -> Result<Polytope, Construct4Error> {
    dvt(&midpoint_cuts(poly)?)
}

/// How to choose the facet to stack onto at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacetPicker {
    /// Always the first facet in canonical order.
    First,
    /// Always the last facet in canonical order.
    Last,
    /// Step `2k + 1` facets forward at stacking step `k`, wrapping around.
    Cycle,
}

impl FacetPicker {
    fn pick(self, step: usize, nfacets: usize) -> usize {
        match self {
            FacetPicker::First => 0,
            FacetPicker::Last => nfacets - 1,
            FacetPicker::Cycle => (2 * step + 1) % nfacets,
        }
    }
}

/// Stacks a pyramid onto one facet, carrying the cut planes along: the new
/// apex is placed on the outward ray through the facet centroid, inside the
/// slab where it is beyond the facet, beneath every other facet, and on the
/// kept side of every existing cut; its own cut plane is spanned by the
/// points where the facet vertices' planes cross the fresh edges.  Backs
/// the apex off toward the facet if that plane fails to separate.
fn stack_once(cs: &CutComplex, facet: usize) -> Result<CutComplex, Construct4Error> {
    let d = cs.poly.dim();
    let vs = cs.poly.vertices();
    let fverts: Vec<usize> = cs.poly.facet_vertex_sets()[facet].iter().copied().collect();
    let mut b = vec![Rat::zero(); d];
    for &v in &fverts {
        for k in 0..d {
            b[k] += &vs[v][k];
        }
    }
    for x in &mut b {
        *x /= rat::int(fverts.len() as i64);
    }
    let c = cs.poly.centroid();
    let u: Vec<Rat> = b.iter().zip(&c).map(|(x, y)| x - y).collect();

    let mut interval = (Some(Rat::zero()), None);
    for (k, row) in cs.poly.facets().iter().enumerate() {
        let r: Vec<Rat> = if k == facet {
            row.iter().map(|x| -x).collect()
        } else {
            row.clone()
        };
        interval = match predicates::clip_line(&r, &b, &u, interval) {
            Some(iv) => iv,
            None => return Err(Construct4Error::NoApex),
        };
    }
    for cut in &cs.cuts {
        interval = match predicates::clip_line(cut, &b, &u, interval) {
            Some(iv) => iv,
            None => return Err(Construct4Error::NoApex),
        };
    }
    let (lo, hi) = interval;
    let lo_val = lo.clone().expect("interval starts at zero");
    let mut lambda = predicates::interval_point(&lo, &hi);

    for _ in 0..40 {
        let w: Vec<Rat> = b.iter().zip(&u).map(|(x, y)| x + &lambda * y).collect();
        // forced cut points on the fresh edges
        let mut rows = Vec::with_capacity(fverts.len());
        for &vi in &fverts {
            let h = &cs.cuts[vi];
            let cv = facet_value(h, &vs[vi]); // negative
            let cw = facet_value(h, &w); // positive inside the interval
            let t = -&cv / (&cw - &cv);
            let mut row = Vec::with_capacity(d + 1);
            row.push(rat::int(1));
            for k in 0..d {
                row.push(&vs[vi][k] + &t * (&w[k] - &vs[vi][k]));
            }
            rows.push(row);
        }
        let ns = linalg::nullspace(&rows, d + 1);
        if ns.len() == 1 {
            let mut hw = rat::primitive(&ns[0]);
            let at_w = facet_value(&hw, &w);
            if !at_w.is_zero() {
                if at_w.is_positive() {
                    for x in &mut hw {
                        *x = -&*x;
                    }
                }
                if vs.iter().all(|p| facet_value(&hw, p).is_positive()) {
                    let mut pts = vs.to_vec();
                    pts.push(w.clone());
                    let newp = Polytope::hull(&pts)?;
                    let mut by_coord: BTreeMap<&Vec<Rat>, &Vec<Rat>> = BTreeMap::new();
                    for (v, cut) in vs.iter().zip(&cs.cuts) {
                        by_coord.insert(v, cut);
                    }
                    let cuts = newp
                        .vertices()
                        .iter()
                        .map(|p| {
                            if *p == w {
                                hw.clone()
                            } else {
                                (*by_coord.get(p).expect("old vertices survive")).clone()
                            }
                        })
                        .collect();
                    return Ok(CutComplex { poly: newp, cuts });
                }
            }
        }
        lambda = (&lo_val + &lambda) / rat::int(2);
    }
    Err(Construct4Error::NoApex)
}

/// A stacked 4-polytope with carried cut planes: `n` successive stackings
/// onto facets of the simplex (facet choice per `picker`), each apex placed
/// compatibly with the midpoint cuts of the base simplex.
pub fn stacked_with_cuts(n: usize, picker: FacetPicker) -> Result<CutComplex, Construct4Error> {
    let mut cs = midpoint_cuts(&simplex(4))?;
    for step in 0..n {
        let nf = cs.poly.facets().len();
        let first = picker.pick(step, nf);
        // try the preferred facet, then the rest in cyclic order
        let mut done = None;
        for off in 0..nf {
            match stack_once(&cs, (first + off) % nf) {
                Ok(next) => {
                    done = Some(next);
                    break;
                }
                Err(Construct4Error::NoApex) => continue,
                Err(e) => return Err(e),
            }
        }
        cs = done.ok_or(Construct4Error::NoApex)?;
    }
    Ok(cs)
}

/// Full flag data (f-vector and vertex-facet incidence count) of a
/// 4-polytope, from its face lattice.
pub fn flag_data(poly: &Polytope) -> Result<FlagData4, Construct4Error> {
    let f = poly.f_vector()?;
    let lattice = poly.face_lattice()?;
    let f03 = lattice.incidence_count(0, 3);
    Ok(FlagData4::new(f, f03)?)
}

/// Closed-form face counts of the deep-truncated stacked polytope:
/// `(10 + 4n, 30 + 18n, 30 + 18n, 10 + 4n)`.
pub fn dvt_stacked_f(n: usize) -> FVector {
    let n = n as i64;
    FVector::from_ints(&[10 + 4 * n, 30 + 18 * n, 30 + 18 * n, 10 + 4 * n])
        .expect("valid f-vector")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis4d::{flag_lower_bound, shape4};
    use num_bigint::BigInt;
    use crate::geometry::equiv::combinatorially_equivalent;

    #[test]
    fn hypersimplex_counts_and_tight_flags() {
        let h = hypersimplex();
        let d = flag_data(&h).unwrap();
        assert_eq!(d.f, FVector::from_ints(&[10, 30, 30, 10]).unwrap());
        assert_eq!(d.f03, BigInt::from(50));
        assert!(d.two_simplicial() && d.two_simple());
        let (holds, tight) = flag_lower_bound(&d);
        assert!(holds && tight);
        let s = shape4(&d.f, Some(&d.f03)).unwrap();
        assert_eq!(s.fatness, rat::int(4));
    }

    #[test]
    fn midpoint_truncation_of_the_tetrahedron_is_the_octahedron() {
        let t = dvt_at_midpoints(&simplex(3)).unwrap();
        let f = t.f_vector().unwrap();
        assert_eq!(f, crate::fvector::f_cross(3).unwrap());
        assert!(combinatorially_equivalent(&t, &cross_polytope(3)));
    }

    #[test]
    fn midpoint_truncation_of_the_4_simplex_is_the_hypersimplex() {
        let t = dvt_at_midpoints(&simplex(4)).unwrap();
        assert!(combinatorially_equivalent(&t, &hypersimplex()));
    }

    #[test]
    fn midpoint_truncation_of_the_cross_polytope_is_the_24_cell() {
        let t = dvt_at_midpoints(&cross_polytope(4)).unwrap();
        // not only equivalent: the same coordinates
        assert_eq!(t.vertices(), cell24().vertices());
        let d = flag_data(&t).unwrap();
        assert_eq!(d.f, FVector::from_ints(&[24, 96, 96, 24]).unwrap());
        assert_eq!(d.f03, BigInt::from(144));
        assert!(d.two_simplicial() && d.two_simple());
    }

    #[test]
    fn single_stacking_has_the_stacked_counts() {
        let cs = stacked_with_cuts(1, FacetPicker::First).unwrap();
        let f = cs.poly.f_vector().unwrap();
        let expected = crate::fvector::f_stack(
            &crate::fvector::f_simplex(4).unwrap(),
            &BigInt::from(1),
        );
        assert_eq!(f, expected);
        assert_eq!(cs.cuts.len(), 6);
    }

    #[test]
    fn truncated_stacked_polytopes_match_the_closed_form() {
        for n in 0..=2 {
            let cs = stacked_with_cuts(n, FacetPicker::First).unwrap();
            let t = dvt(&cs).unwrap();
            let d = flag_data(&t).unwrap();
            assert_eq!(d.f, dvt_stacked_f(n), "n = {n}");
            assert!(d.two_simplicial() && d.two_simple(), "n = {n}");
            let (_, tight) = flag_lower_bound(&d);
            assert!(tight, "n = {n}");
            let s = shape4(&d.f, Some(&d.f03)).unwrap();
            let fatness = s.fatness;
            assert!(fatness >= rat::int(4) && fatness < rat::frac(9, 2), "n = {n}");
        }
    }

    #[test]
    fn pickers_agree_on_counts_but_choose_different_facets() {
        let a = stacked_with_cuts(2, FacetPicker::First).unwrap();
        let b = stacked_with_cuts(2, FacetPicker::Last).unwrap();
        let fa = a.poly.f_vector().unwrap();
        let fb = b.poly.f_vector().unwrap();
        assert_eq!(fa, fb);
    }
}
