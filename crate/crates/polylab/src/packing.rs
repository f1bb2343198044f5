//! Primal-dual circle patterns for 3-connected planar maps.
//!
//! Removing one edge `f = {u, v}` and its two sides `F1, F2` from the
//! vertex-face incidence structure of a map leaves a quad pattern whose
//! nodes are the surviving vertices and faces and whose edges are the
//! surviving corner incidences.  Assigning a radius to every node so that
//! kites with angles `2 arctan(r_j / r_i)` close up flat (total `2 pi`
//! around interior nodes, `pi` along the removed quartet's lines) produces
//! an orthogonal circle pattern filling a rectangle — the planar stage of
//! the midsphere realization of the map.
//!
//! Three layers live here: the combinatorial pattern with its exact
//! rational coherence certificate, a damped Newton solver for the
//! log-radii, and the floating-point kite layout with its self-checks.

use crate::linalg;
use crate::lp;
use crate::planar::{PlanarError, PlanarMap};
use crate::rat::{self, Rat};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// Errors from pattern construction, solving, and layout.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PackingError {
    /// The marked edge is not an edge of the map.
    #[error("marked edge ({0}, {1}) is not in the map")]
    NoSuchEdge(usize, usize),
    /// Underlying map error.
    #[error("planar map error: {0}")]
    Map(#[from] PlanarError),
    /// A boundary node lost a number of corners other than one.
    #[error("node lost {0} corners; the quartet must remove exactly one per boundary node")]
    QuartetDegenerate(usize),
    /// The angle bookkeeping identity `2 n_int + n_bnd = #corners` failed.
    #[error("angle totals are inconsistent with the corner count")]
    AngleTotalsInconsistent,
    /// Newton iteration failed to reach the residual target.
    #[error("radius solve did not converge: residual {0}")]
    NoConvergence(f64),
    /// The layout violated a closure or tangency tolerance.
    #[error("layout inconsistent: {0}")]
    LayoutInconsistent(String),
}

/// A node of the quad pattern: a surviving vertex or face of the map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Node {
    /// Vertex `v` of the map.
    Vertex(usize),
    /// Face with index `f` in the map's face list.
    Face(usize),
}

/// The combinatorial data of a rectangle circle pattern.
#[derive(Debug, Clone)]
pub struct QuadPattern {
    /// Node labels; vertex nodes first, then face nodes.
    pub nodes: Vec<Node>,
    /// Corner incidences between surviving nodes, as index pairs
    /// `(vertex node, face node)`.
    pub corners: Vec<(usize, usize)>,
    /// For each node, its corner partners in rotation order.  Interior fans
    /// are cyclic; boundary fans are linear, starting just after the lost
    /// corner.
    pub fans: Vec<Vec<usize>>,
    /// Whether each node lost a corner to the removed quartet.
    pub boundary: Vec<bool>,
    /// For boundary nodes, which removed element's line carries the node:
    /// 0 = vertex `u`, 1 = vertex `v`, 2 = face `F1`, 3 = face `F2`.
    pub side: Vec<Option<u8>>,
    /// Surviving tangent pairs of vertex circles (edges of the map minus
    /// everything touching the quartet).
    pub primal_tangencies: Vec<(usize, usize)>,
    /// Surviving tangent pairs of face circles.
    pub dual_tangencies: Vec<(usize, usize)>,
    /// The removed quartet `(u, v, F1, F2)`.
    pub quartet: (usize, usize, usize, usize),
}

impl QuadPattern {
    /// Builds the pattern for `map` with the edge `(u, v)` removed.
    pub fn build(map: &PlanarMap, u: usize, v: usize) -> Result<QuadPattern, PackingError> {
        if u >= map.num_vertices()
            || v >= map.num_vertices()
            || !map.adjacency()[u].contains(&v)
        {
            return Err(PackingError::NoSuchEdge(u, v));
        }
        let (f1, f2) = map.faces_of_edge(u, v)?;

        let mut nodes = Vec::new();
        let mut vertex_node = vec![None; map.num_vertices()];
        for w in 0..map.num_vertices() {
            if w != u && w != v {
                vertex_node[w] = Some(nodes.len());
                nodes.push(Node::Vertex(w));
            }
        }
        let mut face_node = vec![None; map.faces().len()];
        for f in 0..map.faces().len() {
            if f != f1 && f != f2 {
                face_node[f] = Some(nodes.len());
                nodes.push(Node::Face(f));
            }
        }

        // Rotation-ordered corner fans.  Vertex fans come from the faces
        // around the vertex; face fans from the face cycle, reversed so both
        // kinds of fan wind the same way in the plane.
        let mut fans = Vec::with_capacity(nodes.len());
        let mut boundary = Vec::with_capacity(nodes.len());
        let mut side = Vec::with_capacity(nodes.len());
        for node in &nodes {
            let (ring, lost_sides): (Vec<Option<usize>>, Vec<u8>) = match *node {
                Node::Vertex(w) => {
                    let mut ring = Vec::new();
                    let mut lost = Vec::new();
                    for &x in &map.adjacency()[w] {
                        let f = map.face_at(w, x)?;
                        if f == f1 {
                            lost.push(2u8);
                            ring.push(None);
                        } else if f == f2 {
                            lost.push(3u8);
                            ring.push(None);
                        } else {
                            ring.push(Some(face_node[f].expect("surviving face")));
                        }
                    }
                    (ring, lost)
                }
                Node::Face(f) => {
                    let cycle = &map.faces()[f];
                    let mut ring = Vec::new();
                    let mut lost = Vec::new();
                    for &w in cycle.iter().rev() {
                        if w == u {
                            lost.push(0u8);
                            ring.push(None);
                        } else if w == v {
                            lost.push(1u8);
                            ring.push(None);
                        } else {
                            ring.push(Some(vertex_node[w].expect("surviving vertex")));
                        }
                    }
                    (ring, lost)
                }
            };
            match lost_sides.len() {
                0 => {
                    fans.push(ring.into_iter().map(|x| x.expect("no losses")).collect());
                    boundary.push(false);
                    side.push(None);
                }
                1 => {
                    // linearize after the lost position
                    let pos = ring.iter().position(|x| x.is_none()).expect("one lost");
                    let mut fan = Vec::with_capacity(ring.len() - 1);
                    for k in 1..ring.len() {
                        fan.push(ring[(pos + k) % ring.len()].expect("only one lost"));
                    }
                    fans.push(fan);
                    boundary.push(true);
                    side.push(Some(lost_sides[0]));
                }
                n => return Err(PackingError::QuartetDegenerate(n)),
            }
        }

        // corner list (vertex node, face node), each exactly once
        let mut corners = Vec::new();
        for (i, node) in nodes.iter().enumerate() {
            if let Node::Vertex(_) = node {
                for &j in &fans[i] {
                    corners.push((i, j));
                }
            }
        }

        // angle bookkeeping: sum of targets must be pi * #corners
        let n_int = boundary.iter().filter(|&&b| !b).count();
        let n_bnd = boundary.len() - n_int;
        if 2 * n_int + n_bnd != corners.len() {
            return Err(PackingError::AngleTotalsInconsistent);
        }

        let mut primal = Vec::new();
        for (a, b) in map.edges() {
            if let (Some(i), Some(j)) = (vertex_node[a], vertex_node[b]) {
                primal.push((i, j));
            }
        }
        let mut dual = Vec::new();
        for (a, b) in map.edges() {
            if (a, b) == (u.min(v), u.max(v)) {
                continue;
            }
            let (fa, fb) = map.faces_of_edge(a, b)?;
            if let (Some(i), Some(j)) = (face_node[fa], face_node[fb]) {
                dual.push((i, j));
            }
        }

        Ok(QuadPattern {
            nodes,
            corners,
            fans,
            boundary,
            side,
            primal_tangencies: primal,
            dual_tangencies: dual,
            quartet: (u, v, f1, f2),
        })
    }

    /// Angle target at node `i`, in units of `pi` (2 interior, 1 boundary).
    pub fn phi_units(&self, i: usize) -> u32 {
        if self.boundary[i] {
            1
        } else {
            2
        }
    }
}

/// Searches for a coherent angle system: positive kite half-angle weights
/// `a_(i,j), a_(j,i)` (in units of `pi`) with `a_(i,j) + a_(j,i) = 1` on
/// every corner and node sums equal to the angle targets.  Such a system
/// exists iff the pattern is realizable by circles; the certificate is
/// exact.  After eliminating the pairing equations the constraints form a
/// bipartite flow system with integer data, so strict positivity is
/// equivalent to feasibility with margin `1/(4 #corners)` (a cut argument:
/// any cut tight at margin zero freezes some corner weight at 0 or 1), and
/// the margin below loses nothing.
pub fn coherent_angle_system(p: &QuadPattern) -> Option<Vec<(Rat, Rat)>> {
    let m = p.corners.len();
    let n = p.nodes.len();
    if m == 0 {
        return None;
    }
    let eps = Rat::new(1.into(), (4 * m as i64).into());
    // variables: x_(2k) = a_(i,j) - eps, x_(2k+1) = a_(j,i) - eps
    let cols = 2 * m;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for k in 0..m {
        let mut row = vec![Rat::zero(); cols];
        row[2 * k] = rat::int(1);
        row[2 * k + 1] = rat::int(1);
        a.push(row);
        b.push(rat::int(1) - &eps - &eps);
    }
    for i in 0..n {
        let mut row = vec![Rat::zero(); cols];
        let mut deg = 0i64;
        for (k, &(ci, cj)) in p.corners.iter().enumerate() {
            if ci == i {
                row[2 * k] = rat::int(1);
                deg += 1;
            }
            if cj == i {
                row[2 * k + 1] = rat::int(1);
                deg += 1;
            }
        }
        a.push(row);
        b.push(rat::int(p.phi_units(i) as i64) - rat::int(deg) * &eps);
    }
    let x = lp::feasible_point(&a, &b)?;
    Some(
        (0..m)
            .map(|k| (&x[2 * k] + &eps, &x[2 * k + 1] + &eps))
            .collect(),
    )
}

fn f_angle(x: f64) -> f64 {
    libm::atan(libm::exp(x))
}

fn f_angle_deriv(x: f64) -> f64 {
    1.0 / (2.0 * libm::cosh(x))
}

/// Gradient of [`bs_energy`]: `g_i = Phi_i - sum_j 2 arctan(e^(rho_j - rho_i))`
/// over the corners at node `i`.  The solver drives its sup norm to zero;
/// at a zero every node's angle target is met exactly.
pub fn bs_gradient(p: &QuadPattern, rho: &[f64]) -> Vec<f64> {
    let pi = core::f64::consts::PI;
    let mut g: Vec<f64> = (0..p.nodes.len())
        .map(|i| pi * f64::from(p.phi_units(i)))
        .collect();
    for &(i, j) in &p.corners {
        g[i] -= 2.0 * f_angle(rho[j] - rho[i]);
        g[j] -= 2.0 * f_angle(rho[i] - rho[j]);
    }
    g
}

fn sup_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(libm::fabs(*x)))
}

/// Solves for log-radii with `sum rho = 0` and residual below `1e-12`,
/// by a damped Newton method on the gradient above.  The Hessian is the
/// weighted graph Laplacian of the pattern (weights `1 / cosh(rho_j -
/// rho_i)`), made definite on the mean-zero slice by a rank-one shift.
pub fn solve_radii(p: &QuadPattern) -> Result<Vec<f64>, PackingError> {
    let n = p.nodes.len();
    let mut rho = vec![0.0f64; n];
    let target = 1e-12;
    let mut g = bs_gradient(p, &rho);
    for _ in 0..200 {
        let gnorm = sup_norm(&g);
        if gnorm <= target {
            return Ok(rho);
        }
        // Hessian + all-ones shift
        let mut h = vec![vec![1.0f64; n]; n];
        for &(i, j) in &p.corners {
            let w = 2.0 * f_angle_deriv(rho[j] - rho[i]);
            h[i][i] += w;
            h[j][j] += w;
            h[i][j] -= w;
            h[j][i] -= w;
        }
        let neg_g: Vec<f64> = g.iter().map(|x| -x).collect();
        let delta = linalg::solve_f64(&h, &neg_g)
            .ok_or(PackingError::NoConvergence(gnorm))?;
        // line search: halve until the residual norm drops
        let mut t = 1.0;
        let mut improved = false;
        for _ in 0..60 {
            let trial: Vec<f64> = rho.iter().zip(&delta).map(|(r, d)| r + t * d).collect();
            let gt = bs_gradient(p, &trial);
            if sup_norm(&gt) < gnorm {
                rho = trial;
                g = gt;
                improved = true;
                break;
            }
            t /= 2.0;
        }
        if !improved {
            return Err(PackingError::NoConvergence(gnorm));
        }
    }
    let gnorm = sup_norm(&g);
    if gnorm <= target {
        Ok(rho)
    } else {
        Err(PackingError::NoConvergence(gnorm))
    }
}

/// The convex energy whose critical point is the solved radius vector.
/// Uses the primitive of `2 arctan(e^x) - pi/2` (an even function), plus
/// the linear angle-target terms; diagnostic only — the solver works on the
/// gradient directly.
pub fn bs_energy(p: &QuadPattern, rho: &[f64]) -> f64 {
    let pi = core::f64::consts::PI;
    let mut s = 0.0;
    for &(i, j) in &p.corners {
        s += even_primitive(rho[j] - rho[i]);
    }
    let mut deg = vec![0u32; p.nodes.len()];
    for &(i, j) in &p.corners {
        deg[i] += 1;
        deg[j] += 1;
    }
    for i in 0..p.nodes.len() {
        s += (pi * f64::from(p.phi_units(i)) - pi / 2.0 * f64::from(deg[i])) * rho[i];
    }
    s
}

/// Primitive of `2 arctan(e^t) - pi/2` from 0 to `x`, by composite Simpson.
fn even_primitive(x: f64) -> f64 {
    let steps = 256;
    let h = x / steps as f64;
    let f = |t: f64| 2.0 * f_angle(t) - core::f64::consts::FRAC_PI_2;
    let mut s = f(0.0) + f(x);
    for k in 1..steps {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(h * k as f64);
    }
    s * h / 3.0
}

/// A placed rectangle pattern: circle centers and radii per node.
#[derive(Debug, Clone)]
pub struct Layout {
    /// Center of each node's circle.
    pub centers: Vec<[f64; 2]>,
    /// Radius of each node's circle.
    pub radii: Vec<f64>,
    /// Rectangle extents: the pattern fills `[x0, x1] x [y0, y1]`.
    pub rect: [f64; 4],
    /// Largest closure/tangency/alignment violation observed.
    pub max_residual: f64,
}

/// Places all circles by walking kites outward from a boundary node on the
/// `F1` side, then verifies closure (every corner placed consistently from
/// both ends), tangencies, boundary alignment, and that the kite areas tile
/// the rectangle.  Tolerance: `1e-9` relative to the rectangle size.
pub fn layout(p: &QuadPattern, rho: &[f64]) -> Result<Layout, PackingError> {
    let n = p.nodes.len();
    let r: Vec<f64> = rho.iter().map(|x| libm::exp(*x)).collect();
    let phi = |i: usize, j: usize| libm::atan2(r[j], r[i]);

    // neighbor lookup: position of j in fan[i]
    let pos_in_fan = |i: usize, j: usize| p.fans[i].iter().position(|&x| x == j);

    let root = (0..n)
        .find(|&i| p.side[i] == Some(2))
        .expect("the F1 side has at least one node");
    let mut center: Vec<Option<[f64; 2]>> = vec![None; n];
    let mut seed: Vec<Option<(usize, f64)>> = vec![None; n]; // (fan position, direction)
    center[root] = Some([0.0, 0.0]);
    seed[root] = Some((0, phi(root, p.fans[root][0])));
    let mut queue = vec![root];
    let mut head = 0;
    let mut max_dev: f64 = 0.0;
    while head < queue.len() {
        let i = queue[head];
        head += 1;
        let zi = center[i].expect("queued nodes are placed");
        let (k0, theta0) = seed[i].expect("queued nodes are seeded");
        let fan = &p.fans[i];
        // directions to every fan member, walking from the seed both ways
        let mut dirs = vec![0.0f64; fan.len()];
        dirs[k0] = theta0;
        for k in k0 + 1..fan.len() {
            dirs[k] = dirs[k - 1] + phi(i, fan[k - 1]) + phi(i, fan[k]);
        }
        for k in (0..k0).rev() {
            dirs[k] = dirs[k + 1] - phi(i, fan[k + 1]) - phi(i, fan[k]);
        }
        for (k, &j) in fan.iter().enumerate() {
            let dist = libm::hypot(r[i], r[j]);
            let zj = [
                zi[0] + dist * libm::cos(dirs[k]),
                zi[1] + dist * libm::sin(dirs[k]),
            ];
            match center[j] {
                Some(existing) => {
                    max_dev = max_dev.max(libm::hypot(existing[0] - zj[0], existing[1] - zj[1]));
                }
                None => {
                    center[j] = Some(zj);
                    let back = pos_in_fan(j, i).expect("corner fans are symmetric");
                    seed[j] = Some((back, dirs[k] + core::f64::consts::PI));
                    queue.push(j);
                }
            }
        }
    }
    if queue.len() != n {
        return Err(PackingError::LayoutInconsistent(String::from(
            "pattern is not connected",
        )));
    }
    let centers: Vec<[f64; 2]> = center.into_iter().map(|c| c.expect("all placed")).collect();

    // tangency residuals for surviving primal and dual edges
    for &(i, j) in p.primal_tangencies.iter().chain(&p.dual_tangencies) {
        let d = libm::hypot(centers[i][0] - centers[j][0], centers[i][1] - centers[j][1]);
        max_dev = max_dev.max(libm::fabs(d - (r[i] + r[j])));
    }

    // boundary alignment: nodes on each side line share a coordinate
    // (sides 2 and 3 = horizontal lines, 0 and 1 = vertical lines)
    let mut line = [f64::NAN; 4];
    for i in 0..n {
        if let Some(s) = p.side[i] {
            let coord = if s >= 2 { centers[i][1] } else { centers[i][0] };
            if line[s as usize].is_nan() {
                line[s as usize] = coord;
            } else {
                max_dev = max_dev.max(libm::fabs(coord - line[s as usize]));
            }
        }
    }
    // circles tangent to the lines of removed nodes they touch in the map:
    // handled implicitly by the area identity below, which fails if any
    // circle crosses or misses its line.

    // rectangle extents and the area identity: kite areas tile the box
    let (u_line, v_line, f1_line, f2_line) = (line[0], line[1], line[2], line[3]);
    if [u_line, v_line, f1_line, f2_line].iter().any(|x| x.is_nan()) {
        return Err(PackingError::LayoutInconsistent(String::from(
            "some rectangle side carries no circle center",
        )));
    }
    let (x0, x1) = (u_line.min(v_line), u_line.max(v_line));
    let (y0, y1) = (f1_line.min(f2_line), f1_line.max(f2_line));
    let mut area = 0.0;
    for &(i, j) in &p.corners {
        area += r[i] * r[j];
    }
    let box_area = (x1 - x0) * (y1 - y0);
    max_dev = max_dev.max(libm::fabs(area - box_area) / box_area.max(1.0));

    let scale = (x1 - x0).max(y1 - y0).max(1.0);
    if max_dev > 1e-9 * scale {
        return Err(PackingError::LayoutInconsistent(alloc::format!(
            "residual {max_dev:e} exceeds tolerance"
        )));
    }
    Ok(Layout {
        centers,
        radii: r,
        rect: [x0, x1, y0, y1],
        max_residual: max_dev,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::platonic_maps;

    fn pattern(name: &str) -> QuadPattern {
        let map = platonic_maps()
            .into_iter()
            .find(|(n, _)| *n == name)
            .expect("known name")
            .1;
        let (u, v) = map.edges()[0];
        QuadPattern::build(&map, u, v).unwrap()
    }

    #[test]
    fn tetrahedron_pattern_structure() {
        let p = pattern("tetrahedron");
        assert_eq!(p.nodes.len(), 4);
        assert_eq!(p.corners.len(), 4);
        assert!(p.boundary.iter().all(|&b| b));
        // one node on each side of the rectangle
        let mut sides: Vec<u8> = p.side.iter().map(|s| s.unwrap()).collect();
        sides.sort_unstable();
        assert_eq!(sides, alloc::vec![0, 1, 2, 3]);
    }

    #[test]
    fn tetrahedron_solves_to_equal_radii() {
        let p = pattern("tetrahedron");
        let rho = solve_radii(&p).unwrap();
        for x in &rho {
            assert!(libm::fabs(*x) < 1e-12, "all radii equal 1, got {x}");
        }
        let l = layout(&p, &rho).unwrap();
        // four unit kites tile a 2 x 2 square
        let w = l.rect[1] - l.rect[0];
        let h = l.rect[3] - l.rect[2];
        assert!(libm::fabs(w - 2.0) < 1e-9);
        assert!(libm::fabs(h - 2.0) < 1e-9);
    }

    #[test]
    fn cube_pattern_counts_and_closed_form() {
        let p = pattern("cube");
        assert_eq!(p.nodes.len(), 10);
        assert_eq!(p.corners.len(), 14);
        let interior = p.boundary.iter().filter(|&&b| !b).count();
        assert_eq!(interior, 4); // 2 vertex nodes + 2 face nodes
        let rho = solve_radii(&p).unwrap();

        // By symmetry the log-radii take four values in arithmetic
        // progression b < c < a < d (interior vertex, interior face,
        // boundary vertex, boundary face) with common gap u satisfying
        // 2 atan(e^u) + atan(e^(3u)) = pi.
        let mut classes: [Vec<f64>; 4] = Default::default();
        for (i, node) in p.nodes.iter().enumerate() {
            let k = match (node, p.boundary[i]) {
                (Node::Vertex(_), true) => 0,
                (Node::Vertex(_), false) => 1,
                (Node::Face(_), false) => 2,
                (Node::Face(_), true) => 3,
            };
            classes[k].push(rho[i]);
        }
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        assert_eq!(sizes, alloc::vec![4, 2, 2, 2]);
        for cl in &classes {
            for x in cl {
                assert!(libm::fabs(x - cl[0]) < 1e-9, "class values agree");
            }
        }
        let (a, b, c, d) = (classes[0][0], classes[1][0], classes[2][0], classes[3][0]);
        let u = a - c;
        assert!(libm::fabs(d - a - u) < 1e-9, "equal gaps");
        assert!(libm::fabs(c - b - u) < 1e-9, "equal gaps");
        let eq = 2.0 * libm::atan(libm::exp(u)) + libm::atan(libm::exp(3.0 * u))
            - core::f64::consts::PI;
        assert!(libm::fabs(eq) < 1e-10, "closed-form identity, got {eq}");
        // in fact u = ln(2)/2: the radius classes are in ratio 1 : sqrt 2 :
        // 2 : 2 sqrt 2, since 2 atan(sqrt 2) + atan(2 sqrt 2) = pi exactly
        assert!(libm::fabs(u - 0.5 * libm::log(2.0)) < 1e-10);

        let l = layout(&p, &rho).unwrap();
        assert!(l.max_residual < 1e-9);
    }

    #[test]
    fn angle_systems_exist_for_platonic_patterns() {
        for (name, map) in platonic_maps() {
            let (u, v) = map.edges()[0];
            let p = QuadPattern::build(&map, u, v).unwrap();
            let sys = coherent_angle_system(&p).unwrap_or_else(|| {
                panic!("{name}: no angle system");
            });
            assert_eq!(sys.len(), p.corners.len());
            // node sums hit the targets exactly
            let mut sums = alloc::vec![Rat::zero(); p.nodes.len()];
            for (k, &(i, j)) in p.corners.iter().enumerate() {
                let (ref aij, ref aji) = sys[k];
                assert_eq!(aij + aji, rat::int(1), "{name} corner sum");
                assert!(aij > &Rat::zero() && aji > &Rat::zero());
                sums[i] += aij;
                sums[j] += aji;
            }
            for i in 0..p.nodes.len() {
                assert_eq!(sums[i], rat::int(p.phi_units(i) as i64), "{name} node {i}");
            }
        }
    }

    #[test]
    fn all_platonic_layouts_close() {
        for (name, map) in platonic_maps() {
            let (u, v) = map.edges()[0];
            let p = QuadPattern::build(&map, u, v).unwrap();
            let rho = solve_radii(&p).unwrap();
            let l = layout(&p, &rho).unwrap();
            assert!(l.max_residual < 1e-9, "{name}: residual {}", l.max_residual);
            assert!(sup_norm(&bs_gradient(&p, &rho)) <= 1e-12, "{name}");
        }
    }

    #[test]
    fn energy_decreases_to_the_solution() {
        let p = pattern("dodecahedron");
        let rho = solve_radii(&p).unwrap();
        let zero = alloc::vec![0.0; rho.len()];
        let s0 = bs_energy(&p, &zero);
        let s1 = bs_energy(&p, &rho);
        assert!(s1 < s0, "energy at solution {s1} below start {s0}");
        // midpoint of the segment lies between by convexity
        let mid: Vec<f64> = rho.iter().map(|x| x / 2.0).collect();
        let sm = bs_energy(&p, &mid);
        assert!(s1 < sm && sm < s0, "{s1} < {sm} < {s0}");
        // perturbations increase the energy (minimality)
        let mut pert = rho.clone();
        pert[0] += 1e-3;
        pert[1] -= 1e-3;
        assert!(bs_energy(&p, &pert) > s1);
    }

    #[test]
    fn bad_edges_are_rejected() {
        let map = platonic_maps().remove(0).1;
        assert!(matches!(
            QuadPattern::build(&map, 0, 0),
            Err(PackingError::NoSuchEdge(0, 0))
        ));
        assert!(QuadPattern::build(&map, 0, 99).is_err());
    }
}
