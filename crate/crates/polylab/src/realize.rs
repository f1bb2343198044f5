//! Realizing 3-connected planar maps as convex 3-polytopes.
//!
//! Two independent pipelines:
//!
//! * [`realize_steinitz`] solves the rectangle circle pattern of the map
//!   ([`crate::packing`]), lifts every circle to the unit sphere by inverse
//!   stereographic projection, and reads off vertices (poles of the vertex
//!   circles' planes) and facet planes (planes of the face circles).  The
//!   result is a floating-point polytope with all edges tangent to the unit
//!   sphere, verified against tolerances.
//!
//! * [`realize_tutte`] computes an exact rational realization: a barycentric
//!   embedding with a triangular outer face, completed to an equilibrium
//!   stress and lifted to a height function face by face.  If the map has no
//!   triangular face its dual does, and the dual's realization is polarized.
//!
//! Both verify the facet structure of the output against the input map.

use crate::geometry::{GeometryError, Polytope};
use crate::packing::{self, Node, PackingError, QuadPattern};
use crate::planar::{PlanarError, PlanarMap};
use crate::rat::{self, Rat};
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// Errors from either realization pipeline.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RealizeError {
    /// Circle pattern stage failed.
    #[error("packing: {0}")]
    Packing(#[from] PackingError),
    /// Map combinatorics failed.
    #[error("map: {0}")]
    Map(#[from] PlanarError),
    /// Exact hull stage failed.
    #[error("geometry: {0}")]
    Geometry(#[from] GeometryError),
    /// A verification step found a violation.
    #[error("verification: {0}")]
    Verification(String),
}

fn verr(msg: &str) -> RealizeError {
    RealizeError::Verification(String::from(msg))
}

/// A floating-point midsphere realization: all edges tangent to the unit
/// sphere centered at the origin.
#[derive(Debug, Clone)]
pub struct MidspherePolytope {
    /// Vertex coordinates, indexed by map vertex.
    pub vertices: Vec<[f64; 3]>,
    /// Facet planes `n . x = c` with `c > 0`, indexed by map face; the
    /// polytope is the intersection of the half-spaces `n . x <= c`.
    pub planes: Vec<[f64; 4]>,
    /// Largest deviation of an incident vertex from its facet plane.
    pub incidence_residual: f64,
    /// Largest deviation of an edge line from unit distance to the origin.
    pub tangency_residual: f64,
    /// Sup norm of the radius-solver gradient at the accepted solution.
    pub gradient_norm: f64,
}

/// An exact rational realization of a map.
#[derive(Debug, Clone)]
pub struct RealizedMap {
    /// Vertex coordinates, indexed by map vertex.
    pub vertices: Vec<Vec<Rat>>,
    /// The convex hull, whose labeled facets have been verified to match
    /// the faces of the map.
    pub polytope: Polytope,
}

// ---------------------------------------------------------------------------
// circle pattern lifting

/// Realizes `map` with all edges tangent to the unit sphere, from the
/// rectangle circle pattern for the marked edge `(u, v)`.
pub fn realize_steinitz_from_edge(
    map: &PlanarMap,
    u: usize,
    v: usize,
) -> Result<MidspherePolytope, RealizeError> {
    let pattern = QuadPattern::build(map, u, v)?;
    let rho = packing::solve_radii(&pattern)?;
    let gradient_norm = packing::bs_gradient(&pattern, &rho)
        .iter()
        .fold(0.0f64, |m, x| m.max(libm::fabs(*x)));
    let lay = packing::layout(&pattern, &rho)?;

    // Normalize: rectangle center at the origin, everything within radius
    // 0.45 of it, so no circle image passes near the projection pole and
    // no lifted plane is close to a great circle.
    let cx = (lay.rect[0] + lay.rect[1]) / 2.0;
    let cy = (lay.rect[2] + lay.rect[3]) / 2.0;
    let mut extent: f64 = 0.0;
    for (z, r) in lay.centers.iter().zip(&lay.radii) {
        extent = extent.max(libm::hypot(z[0] - cx, z[1] - cy) + r);
    }
    let s = 0.45 / extent;

    // A circle (a, b, r) in the plane lifts through inverse stereographic
    // projection from the north pole to the plane section
    //   -2a x - 2b y + (1 - d) z = -(1 + d),      d = a^2 + b^2 - r^2,
    // whose pole with respect to the sphere is (2a, 2b, d - 1) / (1 + d).
    // A line beta X + gamma Y + d0 = 0 lifts to the section
    //   beta x + gamma y - d0 z = -d0   (through the north pole).
    let circle = |i: usize| -> (f64, f64, f64) {
        let a = (lay.centers[i][0] - cx) * s;
        let b = (lay.centers[i][1] - cy) * s;
        (a, b, lay.radii[i] * s)
    };
    let apex_of_circle = |a: f64, b: f64, r: f64| -> [f64; 3] {
        let d = a * a + b * b - r * r;
        [2.0 * a / (1.0 + d), 2.0 * b / (1.0 + d), (d - 1.0) / (1.0 + d)]
    };
    let plane_of_circle = |a: f64, b: f64, r: f64| -> [f64; 4] {
        let d = a * a + b * b - r * r;
        [2.0 * a, 2.0 * b, d - 1.0, 1.0 + d]
    };

    // side lines of the rectangle, in normalized coordinates
    let line_coord = |side: u8| -> Option<f64> {
        for i in 0..pattern.nodes.len() {
            if pattern.side[i] == Some(side) {
                let z = circle(i);
                return Some(if side >= 2 { z.1 } else { z.0 });
            }
        }
        None
    };
    let xu = line_coord(0).ok_or_else(|| verr("side line without circles"))?;
    let xv = line_coord(1).ok_or_else(|| verr("side line without circles"))?;
    let yf1 = line_coord(2).ok_or_else(|| verr("side line without circles"))?;
    let yf2 = line_coord(3).ok_or_else(|| verr("side line without circles"))?;

    let (u_idx, v_idx, f1_idx, f2_idx) = pattern.quartet;
    let mut vertices = vec![[f64::NAN; 3]; map.num_vertices()];
    let mut planes = vec![[f64::NAN; 4]; map.faces().len()];
    // vertical line x = x0: pole (1/x0, 0, 1); horizontal line y = y0:
    // plane (0, 1, y0; y0)
    vertices[u_idx] = [1.0 / xu, 0.0, 1.0];
    vertices[v_idx] = [1.0 / xv, 0.0, 1.0];
    planes[f1_idx] = [0.0, 1.0, yf1, yf1];
    planes[f2_idx] = [0.0, 1.0, yf2, yf2];
    for (i, node) in pattern.nodes.iter().enumerate() {
        let (a, b, r) = circle(i);
        match *node {
            Node::Vertex(w) => vertices[w] = apex_of_circle(a, b, r),
            Node::Face(f) => planes[f] = plane_of_circle(a, b, r),
        }
    }
    // orient all planes so the interior (origin) side is n . x < c
    for p in &mut planes {
        if p[3] < 0.0 {
            for x in p.iter_mut() {
                *x = -*x;
            }
        }
        if p[3] == 0.0 {
            return Err(verr("facet plane through the sphere center"));
        }
    }

    // -- verification --------------------------------------------------
    let scale = vertices
        .iter()
        .map(|p| libm::hypot(libm::hypot(p[0], p[1]), p[2]))
        .fold(1.0f64, f64::max);
    let tol = 1e-7 * scale;

    // vertices strictly outside the sphere
    for p in &vertices {
        let n = libm::hypot(libm::hypot(p[0], p[1]), p[2]);
        if !(n > 1.0) {
            return Err(verr("vertex not outside the midsphere"));
        }
    }

    // incidences: vertices of a face on its plane, all others strictly
    // on the interior side
    let mut incidence_residual: f64 = 0.0;
    for (f, cycle) in map.faces().iter().enumerate() {
        let pl = planes[f];
        let members: BTreeSet<usize> = cycle.iter().copied().collect();
        for (w, p) in vertices.iter().enumerate() {
            let err = pl[0] * p[0] + pl[1] * p[1] + pl[2] * p[2] - pl[3];
            if members.contains(&w) {
                incidence_residual = incidence_residual.max(libm::fabs(err));
                if libm::fabs(err) > tol {
                    return Err(verr("incident vertex off its facet plane"));
                }
            } else if err >= -tol {
                return Err(verr("nonincident vertex not strictly inside"));
            }
        }
    }

    // every edge tangent to the unit sphere, touching between the vertices
    let mut tangency_residual: f64 = 0.0;
    for (a, b) in map.edges() {
        let p = vertices[a];
        let q = vertices[b];
        let d = [q[0] - p[0], q[1] - p[1], q[2] - p[2]];
        let len2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
        // foot of the perpendicular from the origin
        let t = -(p[0] * d[0] + p[1] * d[1] + p[2] * d[2]) / len2;
        if !(0.0 < t && t < 1.0) {
            return Err(verr("tangency point outside the edge segment"));
        }
        let foot = [p[0] + t * d[0], p[1] + t * d[1], p[2] + t * d[2]];
        let dist = libm::hypot(libm::hypot(foot[0], foot[1]), foot[2]);
        tangency_residual = tangency_residual.max(libm::fabs(dist - 1.0));
        if libm::fabs(dist - 1.0) > tol {
            return Err(verr("edge not tangent to the midsphere"));
        }
    }

    Ok(MidspherePolytope {
        vertices,
        planes,
        incidence_residual,
        tangency_residual,
        gradient_norm,
    })
}

/// [`realize_steinitz_from_edge`] with the first edge of the map marked.
pub fn realize_steinitz(map: &PlanarMap) -> Result<MidspherePolytope, RealizeError> {
    let (u, v) = map.edges()[0];
    realize_steinitz_from_edge(map, u, v)
}

// ---------------------------------------------------------------------------
// exact barycentric embedding and lift

/// Barycentric (rubber-band) embedding: the vertices of `outer` are pinned
/// to a fixed triangle and every other vertex is placed at the average of
/// its neighbors.  Exact rational output, indexed by map vertex.
pub fn tutte_embedding(
    map: &PlanarMap,
    outer: usize,
) -> Result<Vec<[Rat; 2]>, RealizeError> {
    let cycle = map
        .faces()
        .get(outer)
        .ok_or_else(|| verr("no such face"))?
        .clone();
    if cycle.len() != 3 {
        return Err(verr("outer face must be a triangle"));
    }
    let n = map.num_vertices();
    let pinned: [(usize, [Rat; 2]); 3] = [
        (cycle[0], [rat::int(0), rat::int(0)]),
        (cycle[1], [rat::int(1), rat::int(0)]),
        (cycle[2], [rat::int(0), rat::int(1)]),
    ];
    let inner: Vec<usize> = (0..n).filter(|w| !cycle.contains(w)).collect();
    let col_of = |w: usize| inner.iter().position(|&x| x == w);

    // deg(w) x_w - sum_{inner neighbors} x_n = sum_{pinned neighbors} p_n
    let mut a = Vec::with_capacity(inner.len());
    let mut bx = Vec::with_capacity(inner.len());
    let mut by = Vec::with_capacity(inner.len());
    for &w in &inner {
        let mut row = vec![Rat::zero(); inner.len()];
        row[col_of(w).expect("inner")] = rat::int(map.adjacency()[w].len() as i64);
        let mut rx = Rat::zero();
        let mut ry = Rat::zero();
        for &nb in &map.adjacency()[w] {
            match col_of(nb) {
                Some(c) => row[c] -= rat::int(1),
                None => {
                    let p = &pinned.iter().find(|(x, _)| *x == nb).expect("pinned").1;
                    rx += &p[0];
                    ry += &p[1];
                }
            }
        }
        a.push(row);
        bx.push(rx);
        by.push(ry);
    }
    let xs = crate::linalg::solve(&a, &bx).ok_or_else(|| verr("embedding system singular"))?;
    let ys = crate::linalg::solve(&a, &by).ok_or_else(|| verr("embedding system singular"))?;

    let mut pos = vec![[Rat::zero(), Rat::zero()]; n];
    for (x, p) in &pinned {
        pos[*x] = p.clone();
    }
    for (k, &w) in inner.iter().enumerate() {
        pos[w] = [xs[k].clone(), ys[k].clone()];
    }
    Ok(pos)
}

/// Completes the all-ones interior stress of a barycentric embedding to a
/// full equilibrium stress (solving for the three outer edge stresses) and
/// lifts the embedding to heights: across each interior edge the face
/// gradient jumps by the stress times the rotated edge vector.  Returns one
/// height per vertex, zero on the outer face.
pub fn maxwell_lift(
    map: &PlanarMap,
    outer: usize,
    pos: &[[Rat; 2]],
) -> Result<Vec<Rat>, RealizeError> {
    let cycle = map.faces()[outer].clone();
    if cycle.len() != 3 {
        return Err(verr("outer face must be a triangle"));
    }
    let (t0, t1, t2) = (cycle[0], cycle[1], cycle[2]);
    let diff = |a: usize, b: usize| -> [Rat; 2] {
        [&pos[a][0] - &pos[b][0], &pos[a][1] - &pos[b][1]]
    };

    // residual force at an outer vertex from the unit stresses
    let residual = |t: usize| -> [Rat; 2] {
        let mut r = [Rat::zero(), Rat::zero()];
        for &nb in &map.adjacency()[t] {
            if !cycle.contains(&nb) {
                let d = diff(nb, t);
                r[0] += &d[0];
                r[1] += &d[1];
            }
        }
        r
    };
    let r0 = residual(t0);
    let r1 = residual(t1);
    // with the pinning (0,0), (1,0), (0,1): at t0 the edge directions are
    // the coordinate axes, so the two outer stresses at t0 read off directly
    let e01 = diff(t1, t0);
    let e02 = diff(t2, t0);
    let e12 = diff(t2, t1);
    // solve the 2x2 system w01 e01 + w02 e02 = -r0
    let det = &e01[0] * &e02[1] - &e01[1] * &e02[0];
    if det.is_zero() {
        return Err(verr("outer triangle is degenerate"));
    }
    let w01 = (-&r0[0] * &e02[1] + &r0[1] * &e02[0]) / &det;
    let w02 = (-&e01[0] * &r0[1] + &e01[1] * &r0[0]) / &det;
    // stress on t1 t2 from the x-equilibrium at t1
    if e12[0].is_zero() && e12[1].is_zero() {
        return Err(verr("outer triangle is degenerate"));
    }
    let w12 = if !e12[0].is_zero() {
        (-&r1[0] + &w01 * &e01[0]) / &e12[0]
    } else {
        (-&r1[1] + &w01 * &e01[1]) / &e12[1]
    };

    // full equilibrium check at every vertex
    let stress = |a: usize, b: usize| -> Rat {
        let (x, y) = (a.min(b), a.max(b));
        let pair = (x, y);
        if pair == (t0.min(t1), t0.max(t1)) {
            w01.clone()
        } else if pair == (t0.min(t2), t0.max(t2)) {
            w02.clone()
        } else if pair == (t1.min(t2), t1.max(t2)) {
            w12.clone()
        } else {
            rat::int(1)
        }
    };
    for w in 0..map.num_vertices() {
        let mut f = [Rat::zero(), Rat::zero()];
        for &nb in &map.adjacency()[w] {
            let s = stress(w, nb);
            let d = diff(nb, w);
            f[0] += &s * &d[0];
            f[1] += &s * &d[1];
        }
        if !f[0].is_zero() || !f[1].is_zero() {
            return Err(verr("stress completion failed to balance"));
        }
    }

    // face gradients by breadth-first walk over the dual; crossing the
    // directed edge (a, b) from its left face to its right face adds the
    // stress times the rotated edge vector
    let nf = map.faces().len();
    let mut grad: Vec<Option<[Rat; 2]>> = vec![None; nf];
    grad[outer] = Some([Rat::zero(), Rat::zero()]);
    let mut queue = vec![outer];
    let mut head = 0;
    while head < queue.len() {
        let f = queue[head];
        head += 1;
        let g = grad[f].clone().expect("queued faces have gradients");
        let cyc = map.faces()[f].clone();
        for k in 0..cyc.len() {
            let a = cyc[k];
            let b = cyc[(k + 1) % cyc.len()];
            let f2 = map.face_at(b, a)?;
            if grad[f2].is_none() {
                let s = stress(a, b);
                let d = diff(b, a);
                let rotated = [-&d[1], d[0].clone()];
                grad[f2] = Some([&g[0] + &s * &rotated[0], &g[1] + &s * &rotated[1]]);
                queue.push(f2);
            }
        }
    }

    // integrate heights over the primal graph
    let mut h: Vec<Option<Rat>> = vec![None; map.num_vertices()];
    h[t0] = Some(Rat::zero());
    let mut queue = vec![t0];
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        let hw = h[w].clone().expect("queued vertices have heights");
        for &nb in &map.adjacency()[w] {
            if h[nb].is_none() {
                let f = map.face_at(w, nb)?;
                let g = grad[f].clone().expect("all gradients set");
                let d = diff(nb, w);
                h[nb] = Some(&hw + &g[0] * &d[0] + &g[1] * &d[1]);
                queue.push(nb);
            }
        }
    }
    let heights: Vec<Rat> = h.into_iter().map(|x| x.expect("connected")).collect();

    // exact consistency: every face is affine with its own gradient
    for (f, cyc) in map.faces().iter().enumerate() {
        let g = grad[f].clone().expect("all gradients set");
        for k in 0..cyc.len() {
            let a = cyc[k];
            let b = cyc[(k + 1) % cyc.len()];
            let d = diff(b, a);
            let expect = &heights[a] + &g[0] * &d[0] + &g[1] * &d[1];
            if heights[b] != expect {
                return Err(verr("lifted heights are not face-affine"));
            }
        }
    }
    Ok(heights)
}

/// Matches the labeled facets of `poly` (built from `points`, one per map
/// vertex) against the faces of a map; returns the hull-vertex index of
/// every map vertex.
fn check_labeled_faces(
    poly: &Polytope,
    points: &[Vec<Rat>],
    faces: &[Vec<usize>],
) -> Result<Vec<usize>, RealizeError> {
    if poly.vertices().len() != points.len() {
        return Err(verr("some lifted point is not a vertex of the hull"));
    }
    let mut hull_index = vec![usize::MAX; points.len()];
    for (w, p) in points.iter().enumerate() {
        match poly.vertices().iter().position(|q| q == p) {
            Some(i) => hull_index[w] = i,
            None => return Err(verr("lifted point missing from the hull")),
        }
    }
    let mut expected: Vec<BTreeSet<usize>> = faces
        .iter()
        .map(|cyc| cyc.iter().map(|&w| hull_index[w]).collect())
        .collect();
    expected.sort();
    let mut got: Vec<BTreeSet<usize>> = poly.facet_vertex_sets().to_vec();
    got.sort();
    if expected != got {
        return Err(verr("hull facets differ from the map faces"));
    }
    Ok(hull_index)
}

/// Exact rational realization of a map whose face `outer` is a triangle.
fn realize_tutte_direct(map: &PlanarMap, outer: usize) -> Result<RealizedMap, RealizeError> {
    let pos = tutte_embedding(map, outer)?;
    let heights = maxwell_lift(map, outer, &pos)?;
    let points: Vec<Vec<Rat>> = pos
        .iter()
        .zip(&heights)
        .map(|(p, h)| vec![p[0].clone(), p[1].clone(), h.clone()])
        .collect();
    let poly = Polytope::hull(&points)?;
    check_labeled_faces(&poly, &points, map.faces())?;
    Ok(RealizedMap {
        vertices: points,
        polytope: poly,
    })
}

/// Exact rational realization of any 3-connected map.  Uses a triangular
/// face as the outer face directly; if the map has none, its dual has one
/// (the average vertex degree and face size cannot both exceed three), so
/// the dual is realized and polarized back.
pub fn realize_tutte(map: &PlanarMap) -> Result<RealizedMap, RealizeError> {
    if let Some(t) = map.faces().iter().position(|f| f.len() == 3) {
        return realize_tutte_direct(map, t);
    }
    let dual = map.dual()?;
    let t = dual
        .faces()
        .iter()
        .position(|f| f.len() == 3)
        .ok_or_else(|| verr("neither the map nor its dual has a triangle"))?;
    let rd = realize_tutte_direct(&dual, t)?;

    // center the dual realization and polarize: the facet that carries the
    // dual face of primal vertex w becomes w's coordinates
    let c = rd.polytope.centroid();
    let shifted = rd.polytope.translate(&c.iter().map(|x| -x).collect::<Vec<_>>());

    // dual face index -> set of dual vertices = primal faces at a vertex
    let hull_index = check_labeled_faces(&shifted, &{
        let mut pts = rd.vertices.clone();
        for p in &mut pts {
            for (x, ci) in p.iter_mut().zip(&c) {
                *x -= ci;
            }
        }
        pts
    }, dual.faces())?;

    let mut points: Vec<Vec<Rat>> = Vec::with_capacity(map.num_vertices());
    for w in 0..map.num_vertices() {
        // the faces of the dual realization are labeled by hull indices;
        // primal vertex w corresponds to the dual face whose dual-vertex set
        // is the set of primal faces containing w
        let fset: BTreeSet<usize> = (0..map.faces().len())
            .filter(|&f| map.faces()[f].contains(&w))
            .map(|f| hull_index[f])
            .collect();
        let fi = shifted
            .facet_vertex_sets()
            .iter()
            .position(|s| *s == fset)
            .ok_or_else(|| verr("no dual facet matches a primal vertex"))?;
        let row = &shifted.facets()[fi];
        // facet a0 + a . x >= 0 with interior origin (a0 > 0) polarizes to
        // the point -a / a0
        let a0 = &row[0];
        if a0 <= &Rat::zero() {
            return Err(verr("dual realization does not contain the origin"));
        }
        points.push(row[1..].iter().map(|a| -(a / a0)).collect());
    }
    let poly = Polytope::hull(&points)?;
    check_labeled_faces(&poly, &points, map.faces())?;
    Ok(RealizedMap {
        vertices: points,
        polytope: poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{platonic_maps, random_map};

    fn named(name: &str) -> PlanarMap {
        platonic_maps()
            .into_iter()
            .find(|(n, _)| *n == name)
            .expect("known name")
            .1
    }

    #[test]
    fn tetrahedron_midsphere() {
        let m = named("tetrahedron");
        let r = realize_steinitz(&m).unwrap();
        assert!(r.incidence_residual < 1e-9);
        assert!(r.tangency_residual < 1e-9);
        // the two marked vertices lift to the tangent plane at the pole
        let (u, v) = m.edges()[0];
        assert!(libm::fabs(r.vertices[u][2] - 1.0) < 1e-12);
        assert!(libm::fabs(r.vertices[v][2] - 1.0) < 1e-12);
    }

    #[test]
    fn all_platonic_midspheres() {
        for (name, m) in platonic_maps() {
            let r = realize_steinitz(&m).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(r.vertices.len(), m.num_vertices(), "{name}");
            assert_eq!(r.planes.len(), m.faces().len(), "{name}");
        }
    }

    #[test]
    fn tetrahedron_exact_lift() {
        let m = named("tetrahedron");
        let r = realize_tutte(&m).unwrap();
        let f = r.polytope.f_vector().unwrap();
        assert_eq!(f, crate::fvector::f_simplex(3).unwrap());
    }

    #[test]
    fn cube_exact_lift_goes_through_the_dual() {
        let m = named("cube");
        let r = realize_tutte(&m).unwrap();
        let f = r.polytope.f_vector().unwrap();
        assert_eq!(f, crate::fvector::f_cube(3).unwrap());
        // and it is the combinatorial cube, not merely one with its counts
        let unit = Polytope::hull(
            &(0..8)
                .map(|k| {
                    (0..3)
                        .map(|i| rat::int(((k >> i) & 1) as i64))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(crate::geometry::equiv::combinatorially_equivalent(
            &r.polytope,
            &unit
        ));
    }

    #[test]
    fn octahedron_and_icosahedron_exact_lifts() {
        let m = named("octahedron");
        let f = realize_tutte(&m).unwrap().polytope.f_vector().unwrap();
        assert_eq!(f, crate::fvector::f_cross(3).unwrap());
        let m = named("icosahedron");
        let f = realize_tutte(&m).unwrap().polytope.f_vector().unwrap();
        assert_eq!(f.entry(0), &num_bigint::BigInt::from(12));
        assert_eq!(f.entry(2), &num_bigint::BigInt::from(20));
    }

    #[test]
    fn dodecahedron_exact_lift_via_dual() {
        let m = named("dodecahedron");
        let r = realize_tutte(&m).unwrap();
        let f = r.polytope.f_vector().unwrap();
        assert_eq!(f.entry(0), &num_bigint::BigInt::from(20));
        assert_eq!(f.entry(1), &num_bigint::BigInt::from(30));
        assert_eq!(f.entry(2), &num_bigint::BigInt::from(12));
    }

    #[test]
    fn random_maps_realize_both_ways() {
        for seed in [3u64, 7, 11] {
            let m = random_map(seed, 12);
            realize_steinitz(&m).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            let r = realize_tutte(&m).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert_eq!(r.vertices.len(), m.num_vertices());
        }
    }

    #[test]
    fn lift_heights_are_zero_exactly_on_the_outer_face() {
        let m = named("octahedron");
        let outer = m.faces().iter().position(|f| f.len() == 3).unwrap();
        let pos = tutte_embedding(&m, outer).unwrap();
        let h = maxwell_lift(&m, outer, &pos).unwrap();
        for w in 0..m.num_vertices() {
            let on_outer = m.faces()[outer].contains(&w);
            assert_eq!(h[w].is_zero(), on_outer, "vertex {w}");
        }
    }
}
