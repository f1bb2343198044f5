//! Exact polytope geometry: hulls, vertex enumeration, polarity, faces.
//!
//! A [`Polytope`] is a full-dimensional bounded intersection of halfspaces,
//! stored redundantly as canonical vertex and facet lists plus their
//! incidence relation.  All computation is exact over rationals; every
//! degenerate input is reported through [`GeometryError`] rather than
//! silently mishandled, including infeasible inequality systems (with a
//! Farkas certificate), unbounded systems (with a recession ray), and
//! lower-dimensional point sets (with their affine rank).

pub mod dd;
pub mod equiv;
pub mod lattice;
pub mod predicates;

use crate::fvector::FVector;
use crate::linalg;
use crate::lp;
use crate::rat::{self, Rat};
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

/// Errors from exact polytope computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    /// No points were given.
    #[error("no input points")]
    NoPoints,
    /// Input rows or points have inconsistent lengths.
    #[error("inconsistent dimensions in input")]
    DimensionMismatch,
    /// The points span a proper affine subspace; includes the affine rank.
    #[error("points are not full-dimensional: affine rank {affine_rank} in R^{ambient}")]
    NotFullDimensional {
        /// Dimension of the affine hull of the input.
        affine_rank: usize,
        /// Ambient dimension.
        ambient: usize,
    },
    /// The inequality system has no solution; a Farkas certificate is
    /// attached: nonnegative multipliers combining the rows to `0 >= 1`.
    #[error("inequality system is infeasible")]
    Infeasible {
        /// Nonnegative row multipliers witnessing infeasibility.
        certificate: Vec<Rat>,
    },
    /// The inequality system is feasible but unbounded in some direction.
    #[error("polyhedron is unbounded along a recession ray")]
    Unbounded {
        /// A recession-cone ray.
        ray: Vec<Rat>,
    },
    /// The homogenization cone contains a line.
    #[error("cone is not pointed (contains a line)")]
    NotPointed,
    /// Polarity needs the origin strictly inside.
    #[error("the origin is not an interior point")]
    OriginNotInterior,
    /// The face poset failed the gradedness consistency check.
    #[error("vertex-facet incidences do not define a graded lattice")]
    NotGraded,
}

/// A full-dimensional polytope with canonical exact V- and H-descriptions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<Rat>>,
    /// Facet inequalities `a_0 + a . x >= 0` as primitive integer rows
    /// `(a_0, a_1, ..., a_d)`.
    facets: Vec<Vec<Rat>>,
    /// For each facet, the indices of the vertices lying on it.
    incidence: Vec<BTreeSet<usize>>,
}

impl Polytope {
    /// Convex hull of a point set.  The points must affinely span their
    /// ambient space; duplicates and non-extreme points are dropped.
    pub fn hull(points: &[Vec<Rat>]) -> Result<Polytope, GeometryError> {
        if points.is_empty() {
            return Err(GeometryError::NoPoints);
        }
        let dim = points[0].len();
        if points.iter().any(|p| p.len() != dim) {
            return Err(GeometryError::DimensionMismatch);
        }
        let distinct: Vec<Vec<Rat>> = points
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let homog: Vec<Vec<Rat>> = distinct.iter().map(|p| homogenize(p)).collect();
        let arank = linalg::rank(&homog);
        if arank < dim + 1 {
            return Err(GeometryError::NotFullDimensional {
                affine_rank: arank.saturating_sub(1),
                ambient: dim,
            });
        }
        let facets = dd::extreme_rays(&homog, dim + 1)?;
        // A point is a vertex iff its tight facet normals span R^dim.
        let mut vertices = Vec::new();
        for p in &distinct {
            let tight: Vec<Vec<Rat>> = facets
                .iter()
                .filter(|f| facet_value(f, p).is_zero())
                .map(|f| f[1..].to_vec())
                .collect();
            if tight.len() >= dim && linalg::rank(&tight) == dim {
                vertices.push(p.clone());
            }
        }
        let incidence = incidences(&facets, &vertices);
        Ok(Polytope { dim, vertices, facets, incidence })
    }

    /// Bounded solution set of the system `a_0 + a . x >= 0`, one row
    /// `(a_0, a_1, ..., a_d)` per halfspace.
    ///
    /// Infeasible systems yield a Farkas certificate, unbounded ones a
    /// recession ray, and lower-dimensional solution sets are rejected with
    /// their affine rank (project them down first).
    pub fn from_inequalities(rows: &[Vec<Rat>]) -> Result<Polytope, GeometryError> {
        if rows.is_empty() {
            return Err(GeometryError::NoPoints);
        }
        let dim = rows[0].len() - 1;
        if dim == 0 || rows.iter().any(|r| r.len() != dim + 1) {
            return Err(GeometryError::DimensionMismatch);
        }

        if let Some(certificate) = farkas_certificate(rows) {
            return Err(GeometryError::Infeasible { certificate });
        }

        // Homogenize: y = (y_0, x~) with row . y >= 0 and y_0 >= 0.  For a
        // nonempty bounded full-dimensional body this cone is pointed, its
        // rays with y_0 > 0 are the vertices, and rays with y_0 = 0 are
        // recession directions.
        let mut cone: Vec<Vec<Rat>> = rows.to_vec();
        let mut nonneg = vec![Rat::zero(); dim + 1];
        nonneg[0] = Rat::one();
        cone.push(nonneg);
        if linalg::rank(&cone) < dim + 1 {
            // The system is feasible, so a rank defect means an affine hull
            // of lower dimension never arises here; it means a lineality
            // direction (the solution set contains a line).
            return Err(GeometryError::NotPointed);
        }
        let rays = dd::extreme_rays(&cone, dim + 1)?;
        let mut points = Vec::new();
        for ray in rays {
            if ray[0].is_zero() {
                return Err(GeometryError::Unbounded { ray: ray[1..].to_vec() });
            }
            points.push(ray[1..].iter().map(|x| x / &ray[0]).collect::<Vec<_>>());
        }
        // Rebuild from the vertex set so facets come out irredundant and
        // canonical even when input rows were redundant or repeated.
        Polytope::hull(&points)
    }

    /// Ambient (= affine) dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    /// Facet rows `(a_0, a)` meaning `a_0 + a . x >= 0`, primitive integer,
    /// in lexicographic order.
    pub fn facets(&self) -> &[Vec<Rat>] {
        &self.facets
    }

    /// Vertex index set of each facet, parallel to [`Polytope::facets`].
    pub fn facet_vertex_sets(&self) -> &[BTreeSet<usize>] {
        &self.incidence
    }

    /// True iff `x` satisfies every facet inequality.
    pub fn contains(&self, x: &[Rat]) -> bool {
        self.facets.iter().all(|f| !facet_value(f, x).is_negative())
    }

    /// True iff `x` satisfies every facet inequality strictly.
    pub fn contains_in_interior(&self, x: &[Rat]) -> bool {
        self.facets.iter().all(|f| facet_value(f, x).is_positive())
    }

    /// Arithmetic mean of the vertices — always an interior point.
    pub fn centroid(&self) -> Vec<Rat> {
        let n = rat::int(self.vertices.len() as i64);
        (0..self.dim)
            .map(|j| {
                let mut s = Rat::zero();
                for v in &self.vertices {
                    s += &v[j];
                }
                s / &n
            })
            .collect()
    }

    /// Translate by `t`.
    pub fn translate(&self, t: &[Rat]) -> Polytope {
        let vertices: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
            .collect();
        // a_0 + a.(x - t) >= 0  =>  (a_0 - a.t) + a.x >= 0
        Polytope::hull(&vertices).expect("translate preserves polytopes")
    }

    /// Polar dual `{ y : x . y <= 1 for all x in P }`; the origin must be
    /// interior (translate to the centroid first if needed).
    pub fn polar(&self) -> Result<Polytope, GeometryError> {
        if !self.facets.iter().all(|f| f[0].is_positive()) {
            return Err(GeometryError::OriginNotInterior);
        }
        let points: Vec<Vec<Rat>> = self
            .facets
            .iter()
            .map(|f| f[1..].iter().map(|a| -(a / &f[0])).collect())
            .collect();
        Polytope::hull(&points)
    }

    /// The f-vector, computed from the face lattice.
    pub fn f_vector(&self) -> Result<FVector, GeometryError> {
        let lat = self.face_lattice()?;
        lat.f_vector()
    }

    /// The full face lattice from the vertex-facet incidences.
    pub fn face_lattice(&self) -> Result<lattice::FaceLattice, GeometryError> {
        lattice::FaceLattice::from_incidences(self.vertices.len(), &self.incidence, self.dim)
    }

    /// Vertex pairs forming edges (the graph of the polytope).
    pub fn graph_edges(&self) -> Result<Vec<(usize, usize)>, GeometryError> {
        if self.dim == 1 {
            return Ok(vec![(0, 1)]);
        }
        let lat = self.face_lattice()?;
        Ok(lat.level(1)
            .iter()
            .map(|e| {
                let mut it = e.iter();
                let a = *it.next().expect("edge has two vertices");
                let b = *it.next().expect("edge has two vertices");
                (a, b)
            })
            .collect())
    }

    /// Intersection with additional halfspaces `a_0 + a . x >= 0`.
    pub fn intersect_halfspaces(&self, rows: &[Vec<Rat>]) -> Result<Polytope, GeometryError> {
        let mut all = self.facets.clone();
        for r in rows {
            if r.len() != self.dim + 1 {
                return Err(GeometryError::DimensionMismatch);
            }
            all.push(r.clone());
        }
        Polytope::from_inequalities(&all)
    }

    /// Deletes the last coordinate (projection along `e_d`) and returns the
    /// hull of the shadows.
    pub fn project_last(&self) -> Result<Polytope, GeometryError> {
        let pts: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .map(|v| v[..v.len() - 1].to_vec())
            .collect();
        Polytope::hull(&pts)
    }

    /// Keeps only the last `k` coordinates (projection onto that coordinate
    /// subspace) and returns the hull of the shadows.
    pub fn project_to_last(&self, k: usize) -> Result<Polytope, GeometryError> {
        let pts: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .map(|v| v[v.len() - k..].to_vec())
            .collect();
        Polytope::hull(&pts)
    }

    /// The vertex set of the facet with index `i`, as explicit points in a
    /// basis of the facet's own affine hull (a full-dimensional
    /// `(d-1)`-polytope), plus the embedding that lifts them back.
    pub fn facet_as_polytope(&self, i: usize) -> Result<(Polytope, AffineEmbedding), GeometryError> {
        let pts: Vec<Vec<Rat>> = self.incidence[i]
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect();
        let (low, emb) = restrict_to_affine_span(&pts)?;
        Ok((Polytope::hull(&low)?, emb))
    }

    /// The vertex figure at vertex `v`: the cross-section of the polytope by
    /// a hyperplane separating `v` from all other vertices, returned in
    /// coordinates of its own affine hull.  Its face lattice is the link of
    /// `v`, so facet shapes of the figure reflect the local structure at `v`.
    pub fn vertex_figure(&self, v: usize) -> Result<Polytope, GeometryError> {
        // The sum of the facet normals tight at v is minimized over the
        // polytope exactly at v, strictly below every other vertex.
        let mut ell = vec![Rat::zero(); self.dim];
        for (f, inc) in self.facets.iter().zip(&self.incidence) {
            if inc.contains(&v) {
                for (e, a) in ell.iter_mut().zip(&f[1..]) {
                    *e += a;
                }
            }
        }
        let at = |x: &[Rat]| linalg::dot(&ell, x);
        let lv = at(&self.vertices[v]);
        let lmin = self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(w, _)| w != v)
            .map(|(_, x)| at(x))
            .min()
            .ok_or(GeometryError::NoPoints)?;
        debug_assert!(lmin > lv);
        let cut = (&lv + &lmin) / rat::int(2);
        // Cut every edge leaving v at the hyperplane ell . x = cut.
        let mut pts = Vec::new();
        for (a, b) in self.graph_edges()? {
            let w = if a == v { b } else if b == v { a } else { continue };
            let lw = at(&self.vertices[w]);
            let t = (&cut - &lv) / (&lw - &lv);
            let p: Vec<Rat> = self.vertices[v]
                .iter()
                .zip(&self.vertices[w])
                .map(|(x, y)| x + &t * (y - x))
                .collect();
            pts.push(p);
        }
        let (low, _) = restrict_to_affine_span(&pts)?;
        Polytope::hull(&low)
    }
}

/// Value of the facet inequality `a_0 + a . x` at `x`.
pub fn facet_value(row: &[Rat], x: &[Rat]) -> Rat {
    debug_assert_eq!(row.len(), x.len() + 1);
    let mut s = row[0].clone();
    for (a, b) in row[1..].iter().zip(x) {
        s += a * b;
    }
    s
}

fn homogenize(p: &[Rat]) -> Vec<Rat> {
    let mut r = Vec::with_capacity(p.len() + 1);
    r.push(Rat::one());
    r.extend_from_slice(p);
    r
}

fn incidences(facets: &[Vec<Rat>], vertices: &[Vec<Rat>]) -> Vec<BTreeSet<usize>> {
    facets
        .iter()
        .map(|f| {
            vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| facet_value(f, v).is_zero())
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

/// Nonnegative multipliers `y` with `sum y_i a_i = 0` and
/// `sum y_i a_{i,0} = -1`, proving the system `a_0 + a . x >= 0` empty;
/// `None` if the system is feasible.
pub fn farkas_certificate(rows: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let dim = rows[0].len() - 1;
    // Feasibility of the primal: x = x+ - x-, slack s:  a.x+ - a.x- - s = -a_0.
    let m = rows.len();
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for row in rows {
        let mut r = Vec::with_capacity(2 * dim + m);
        for x in &row[1..] {
            r.push(x.clone());
        }
        for x in &row[1..] {
            r.push(-x.clone());
        }
        for j in 0..m {
            r.push(if j == a.len() { -Rat::one() } else { Rat::zero() });
        }
        a.push(r);
        b.push(-row[0].clone());
    }
    if lp::feasible_point(&a, &b).is_some() {
        return None;
    }
    // Dual: y >= 0 with rows^T y = 0 on the linear part and <a_0, y> = -1.
    let mut a = Vec::with_capacity(dim + 1);
    let mut b = Vec::with_capacity(dim + 1);
    for j in 1..=dim {
        a.push(rows.iter().map(|r| r[j].clone()).collect::<Vec<_>>());
        b.push(Rat::zero());
    }
    a.push(rows.iter().map(|r| r[0].clone()).collect::<Vec<_>>());
    b.push(-Rat::one());
    Some(lp::feasible_point(&a, &b).expect("either the system or its Farkas dual is feasible"))
}

/// An affine embedding `x = origin + B^T c` of low-dimensional coordinates
/// `c` back into the ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineEmbedding {
    /// Image of the coordinate origin.
    pub origin: Vec<Rat>,
    /// Basis vectors of the affine hull (rows).
    pub basis: Vec<Vec<Rat>>,
}

impl AffineEmbedding {
    /// Maps low-dimensional coordinates back to the ambient space.
    pub fn lift(&self, c: &[Rat]) -> Vec<Rat> {
        let mut x = self.origin.clone();
        for (ci, bi) in c.iter().zip(&self.basis) {
            for (xj, bij) in x.iter_mut().zip(bi) {
                *xj += ci * bij;
            }
        }
        x
    }
}

/// Re-coordinatizes points inside their own affine hull: returns the new
/// coordinates (dimension = affine rank) and the embedding back.
pub fn restrict_to_affine_span(
    points: &[Vec<Rat>],
) -> Result<(Vec<Vec<Rat>>, AffineEmbedding), GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::NoPoints);
    }
    let origin = points[0].clone();
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for p in &points[1..] {
        let d: Vec<Rat> = p.iter().zip(&origin).map(|(a, b)| a - b).collect();
        basis.push(d);
        if linalg::rank(&basis) < basis.len() {
            basis.pop();
        }
    }
    // coordinates: solve  B^T c = p - origin  (consistent by construction)
    let bt: Vec<Vec<Rat>> = (0..origin.len())
        .map(|j| basis.iter().map(|b| b[j].clone()).collect())
        .collect();
    let mut low = Vec::with_capacity(points.len());
    for p in points {
        let rhs: Vec<Rat> = p.iter().zip(&origin).map(|(a, b)| a - b).collect();
        let c = linalg::solve(&bt, &rhs).expect("point lies in the affine span");
        low.push(c);
    }
    Ok((low, AffineEmbedding { origin, basis }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn pt(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn cube_points(d: usize) -> Vec<Vec<Rat>> {
        (0..1usize << d)
            .map(|m| (0..d).map(|i| int(if m >> i & 1 == 1 { 1 } else { -1 })).collect())
            .collect()
    }

    #[test]
    fn hull_of_cube() {
        let p = Polytope::hull(&cube_points(3)).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.facets().len(), 6);
        assert_eq!(p.f_vector().unwrap(), FVector::from_ints(&[8, 12, 6]).unwrap());
        assert!(p.contains(&pt(&[0, 0, 0])));
        assert!(p.contains(&pt(&[1, 1, 1])));
        assert!(!p.contains(&pt(&[2, 0, 0])));
        assert!(!p.contains_in_interior(&pt(&[1, 1, 1])));
        // interior points of the input are dropped
        let mut with_interior = cube_points(3);
        with_interior.push(pt(&[0, 0, 0]));
        let q = Polytope::hull(&with_interior).unwrap();
        assert_eq!(q, p);
    }

    #[test]
    fn vertex_enumeration_round_trip() {
        let p = Polytope::hull(&cube_points(3)).unwrap();
        let q = Polytope::from_inequalities(p.facets()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn cross_polytope_and_polarity() {
        let mut pts = Vec::new();
        for i in 0..4 {
            for s in [1i64, -1] {
                let mut v = pt(&[0, 0, 0, 0]);
                v[i] = int(s);
                pts.push(v);
            }
        }
        let cross = Polytope::hull(&pts).unwrap();
        assert_eq!(
            cross.f_vector().unwrap(),
            FVector::from_ints(&[8, 24, 32, 16]).unwrap()
        );
        let cube = cross.polar().unwrap();
        assert_eq!(
            cube.f_vector().unwrap(),
            FVector::from_ints(&[16, 32, 24, 8]).unwrap()
        );
        let back = cube.polar().unwrap();
        assert_eq!(back, cross);
    }

    #[test]
    fn infeasible_system_gets_certificate() {
        // x >= 1 and -x >= 0 (i.e. x <= 0)
        let rows = vec![vec![int(-1), int(1)], vec![int(0), int(-1)]];
        match Polytope::from_inequalities(&rows) {
            Err(GeometryError::Infeasible { certificate }) => {
                // certificate combines rows to 0 >= 1
                assert_eq!(certificate.len(), 2);
                let a: Rat = &certificate[0] * int(1) + &certificate[1] * int(-1);
                let b: Rat = &certificate[0] * int(-1) + &certificate[1] * int(0);
                assert_eq!(a, int(0));
                assert_eq!(b, int(-1));
            }
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_system_reports_ray() {
        // x >= 0, y >= 0, x + y >= 1: unbounded
        let rows = vec![
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(1)],
            vec![int(-1), int(1), int(1)],
        ];
        assert!(matches!(
            Polytope::from_inequalities(&rows),
            Err(GeometryError::Unbounded { .. })
        ));
    }

    #[test]
    fn line_in_solution_set_is_not_pointed() {
        // only |x| <= 1 in R^2: y is free
        let rows = vec![vec![int(1), int(1), int(0)], vec![int(1), int(-1), int(0)]];
        assert!(matches!(
            Polytope::from_inequalities(&rows),
            Err(GeometryError::NotPointed)
        ));
    }

    #[test]
    fn flat_points_are_rejected_with_rank() {
        let pts = vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 0])];
        match Polytope::hull(&pts) {
            Err(GeometryError::NotFullDimensional { affine_rank, ambient }) => {
                assert_eq!((affine_rank, ambient), (2, 3));
            }
            other => panic!("expected flat rejection, got {other:?}"),
        }
    }

    #[test]
    fn restriction_recovers_full_dimension() {
        let pts = vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 0])];
        let (low, emb) = restrict_to_affine_span(&pts).unwrap();
        let sq = Polytope::hull(&low).unwrap();
        assert_eq!(sq.dim(), 2);
        assert_eq!(sq.vertices().len(), 4);
        for (c, orig) in low.iter().zip(&pts) {
            assert_eq!(&emb.lift(c), orig);
        }
    }

    #[test]
    fn simplex_faces_and_figure() {
        let pts = vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])];
        let p = Polytope::hull(&pts).unwrap();
        assert_eq!(p.f_vector().unwrap(), FVector::from_ints(&[4, 6, 4]).unwrap());
        assert_eq!(p.graph_edges().unwrap().len(), 6);
        let (facet, _) = p.facet_as_polytope(0).unwrap();
        assert_eq!(facet.dim(), 2);
        assert_eq!(facet.vertices().len(), 3);
        let fig = p.vertex_figure(0).unwrap();
        assert_eq!(fig.vertices().len(), 3);
    }

    #[test]
    fn centroid_translation_and_projection() {
        let pts = vec![pt(&[1, 1]), pt(&[3, 1]), pt(&[1, 5]), pt(&[3, 5])];
        let p = Polytope::hull(&pts).unwrap();
        assert_eq!(p.centroid(), vec![int(2), int(3)]);
        let centered = p.translate(&[int(-2), int(-3)]);
        assert!(centered.contains_in_interior(&pt(&[0, 0])));
        let dual = centered.polar().unwrap();
        assert_eq!(dual.vertices().len(), 4);
        let shadow = p.project_last().unwrap();
        assert_eq!(shadow.dim(), 1);
        assert_eq!(shadow.vertices(), &[vec![int(1)], vec![int(3)]]);
        let tall = Polytope::hull(&cube_points(4)).unwrap();
        assert_eq!(tall.project_to_last(2).unwrap().vertices().len(), 4);
    }

    #[test]
    fn fractional_coordinates_are_exact() {
        // 24-cell at quarter scale: conv{ +-e_i/2 +- e_j/2 }
        let mut pts = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                for si in [1i64, -1] {
                    for sj in [1i64, -1] {
                        let mut v = vec![int(0); 4];
                        v[i] = frac(si, 2);
                        v[j] = frac(sj, 2);
                        pts.push(v);
                    }
                }
            }
        }
        let p = Polytope::hull(&pts).unwrap();
        assert_eq!(
            p.f_vector().unwrap(),
            FVector::from_ints(&[24, 96, 96, 24]).unwrap()
        );
    }
}
