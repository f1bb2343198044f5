//! Planar maps: 3-connected planar graphs with an explicit embedding.
//!
//! A [`PlanarMap`] stores, for every vertex, its neighbors in cyclic
//! (rotation) order.  Faces are traced from the rotation system, so the
//! combinatorial embedding is complete: duals, corner incidences and the
//! quad structures needed by circle patterns all derive from it.  The
//! sphericity check `V - E + F = 2` and 3-connectivity are enforced at
//! construction, matching the hypotheses of the realization theorems this
//! crate implements.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Errors from planar-map construction and surgery.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanarError {
    /// Loops, repeated neighbors, or out-of-range indices.
    #[error("adjacency list is not a simple graph: {0}")]
    NotSimple(String),
    /// `u` lists `v` but not conversely.
    #[error("adjacency is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    /// The graph is disconnected.
    #[error("graph is not connected")]
    Disconnected,
    /// Every vertex of a 3-polytope graph has degree at least 3.
    #[error("vertex {0} has degree {1} < 3")]
    DegreeTooLow(usize, usize),
    /// The rotation system does not embed in the sphere.
    #[error("rotation system has genus > 0: V - E + F = {0}, expected 2")]
    NotSpherical(i64),
    /// Removing two vertices disconnects the graph.
    #[error("graph is not 3-connected: {{{0}, {1}}} is a separating pair")]
    NotThreeConnected(usize, usize),
    /// Need at least four vertices.
    #[error("too few vertices: {0}")]
    TooSmall(usize),
    /// Face or edge index out of range.
    #[error("no such {0}")]
    NoSuch(&'static str),
}

/// A 3-connected planar map given by rotation systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    /// `adj[v]` lists the neighbors of `v` in cyclic order.
    adj: Vec<Vec<usize>>,
    /// Faces as vertex cycles, each starting at its smallest directed edge.
    faces: Vec<Vec<usize>>,
}

impl PlanarMap {
    /// Builds and fully validates a map from rotation lists.
    pub fn new(adj: Vec<Vec<usize>>) -> Result<PlanarMap, PlanarError> {
        let n = adj.len();
        if n < 4 {
            return Err(PlanarError::TooSmall(n));
        }
        for (v, nb) in adj.iter().enumerate() {
            if nb.len() < 3 {
                return Err(PlanarError::DegreeTooLow(v, nb.len()));
            }
            let mut seen = BTreeSet::new();
            for &w in nb {
                if w >= n {
                    return Err(PlanarError::NotSimple(alloc::format!(
                        "vertex {v} lists out-of-range neighbor {w}"
                    )));
                }
                if w == v {
                    return Err(PlanarError::NotSimple(alloc::format!("loop at {v}")));
                }
                if !seen.insert(w) {
                    return Err(PlanarError::NotSimple(alloc::format!(
                        "repeated neighbor {w} at vertex {v}"
                    )));
                }
            }
        }
        for (v, nb) in adj.iter().enumerate() {
            for &w in nb {
                if !adj[w].contains(&v) {
                    return Err(PlanarError::NotSymmetric(v, w));
                }
            }
        }
        if !connected_without(&adj, &[]) {
            return Err(PlanarError::Disconnected);
        }
        for a in 0..n {
            for b in a + 1..n {
                if !connected_without(&adj, &[a, b]) {
                    return Err(PlanarError::NotThreeConnected(a, b));
                }
            }
        }
        let faces = trace_faces(&adj);
        let e: usize = adj.iter().map(|nb| nb.len()).sum::<usize>() / 2;
        let euler = n as i64 - e as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(PlanarError::NotSpherical(euler));
        }
        Ok(PlanarMap { adj, faces })
    }

    /// Number of vertices.
    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|nb| nb.len()).sum::<usize>() / 2
    }

    /// Rotation lists.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Faces as vertex cycles (consistently oriented).
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, nb) in self.adj.iter().enumerate() {
            for &w in nb {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The index of the face lying on the traced side of directed edge
    /// `(u, v)`.
    pub fn face_at(&self, u: usize, v: usize) -> Result<usize, PlanarError> {
        for (i, f) in self.faces.iter().enumerate() {
            for k in 0..f.len() {
                if f[k] == u && f[(k + 1) % f.len()] == v {
                    return Ok(i);
                }
            }
        }
        Err(PlanarError::NoSuch("directed edge"))
    }

    /// The two faces bounded by the undirected edge `{u, v}`.
    pub fn faces_of_edge(&self, u: usize, v: usize) -> Result<(usize, usize), PlanarError> {
        Ok((self.face_at(u, v)?, self.face_at(v, u)?))
    }

    /// The dual map: one vertex per face, adjacent across each edge, with
    /// rotations induced by the face cycles.
    pub fn dual(&self) -> Result<PlanarMap, PlanarError> {
        let mut adj = Vec::with_capacity(self.faces.len());
        for (i, f) in self.faces.iter().enumerate() {
            let mut nb = Vec::with_capacity(f.len());
            for k in 0..f.len() {
                let u = f[k];
                let v = f[(k + 1) % f.len()];
                // the face on the other side of (u, v)
                let other = self.face_at(v, u)?;
                debug_assert_ne!(other, i, "3-connected maps have no bridges");
                nb.push(other);
            }
            nb.reverse(); // keep the rotation orientation consistent
            adj.push(nb);
        }
        PlanarMap::new(adj)
    }

    /// Stellar subdivision of face `fi`: a new vertex joined to every vertex
    /// of the face, replacing it by a fan of triangles.
    pub fn stellar_subdivide(&self, fi: usize) -> Result<PlanarMap, PlanarError> {
        let face = self.faces.get(fi).ok_or(PlanarError::NoSuch("face"))?.clone();
        let n = self.adj.len();
        let mut adj = self.adj.clone();
        // rotation at the new vertex: the face cycle reversed, so that
        // orientations of the new triangles match the old map
        let mut star: Vec<usize> = face.clone();
        star.reverse();
        adj.push(star);
        // splice the new vertex into each face vertex's rotation between its
        // two neighbors along the face (directly after the predecessor, so
        // the new triangles inherit the face's orientation)
        for k in 0..face.len() {
            let v = face[k];
            let prev = face[(k + face.len() - 1) % face.len()];
            let pos = adj[v]
                .iter()
                .position(|&w| w == prev)
                .expect("face edge must appear in rotation");
            adj[v].insert(pos + 1, n);
        }
        PlanarMap::new(adj)
    }

    /// Writes the map in the plain text exchange format: one line per
    /// vertex, listing neighbor indices in rotation order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for nb in &self.adj {
            for (i, w) in nb.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&alloc::format!("{w}"));
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text exchange format accepted by [`PlanarMap::to_text`].
    pub fn from_text(text: &str) -> Result<PlanarMap, PlanarError> {
        let mut adj = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut nb = Vec::new();
            for tok in line.split_whitespace() {
                let w: usize = tok
                    .parse()
                    .map_err(|_| PlanarError::NotSimple(alloc::format!("bad token {tok:?}")))?;
                nb.push(w);
            }
            adj.push(nb);
        }
        PlanarMap::new(adj)
    }
}

/// Traces all face cycles of a rotation system.  The successor of the
/// directed edge `(u, v)` is `(v, w)` where `w` follows `u` in the rotation
/// at `v`; orbits of this successor map are the faces.
fn trace_faces(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for u in 0..adj.len() {
        for &v in &adj[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut cycle = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                cycle.push(a);
                seen.insert((a, b));
                let pos = adj[b].iter().position(|&x| x == a).expect("symmetric");
                let w = adj[b][(pos + 1) % adj[b].len()];
                a = b;
                b = w;
                if (a, b) == (u, v) {
                    break;
                }
            }
            faces.push(cycle);
        }
    }
    faces
}

/// Breadth-first connectivity of the graph with some vertices deleted.
fn connected_without(adj: &[Vec<usize>], removed: &[usize]) -> bool {
    let n = adj.len();
    let gone = |v: usize| removed.contains(&v);
    let Some(start) = (0..n).find(|&v| !gone(v)) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !gone(w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).all(|v| gone(v) || seen[v])
}

/// Builds the rotation system of a convex 3-polytope boundary from float
/// vertex coordinates and its edge list: neighbors are sorted by angle in
/// the tangent plane at each vertex (as seen from outside).
pub fn map_from_coordinates(
    coords: &[[f64; 3]],
    edges: &[(usize, usize)],
) -> Result<PlanarMap, PlanarError> {
    let n = coords.len();
    let mut center = [0.0f64; 3];
    for c in coords {
        for k in 0..3 {
            center[k] += c[k] / n as f64;
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for (v, nb) in adj.iter_mut().enumerate() {
        let p = [
            coords[v][0] - center[0],
            coords[v][1] - center[1],
            coords[v][2] - center[2],
        ];
        let norm = libm::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        let axis = [p[0] / norm, p[1] / norm, p[2] / norm];
        // orthonormal frame (e1, e2) of the tangent plane at v
        let mut e1 = if libm::fabs(axis[0]) < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let d = e1[0] * axis[0] + e1[1] * axis[1] + e1[2] * axis[2];
        for k in 0..3 {
            e1[k] -= d * axis[k];
        }
        let l = libm::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
        for x in e1.iter_mut() {
            *x /= l;
        }
        let e2 = [
            axis[1] * e1[2] - axis[2] * e1[1],
            axis[2] * e1[0] - axis[0] * e1[2],
            axis[0] * e1[1] - axis[1] * e1[0],
        ];
        let mut keyed: Vec<(f64, usize)> = nb
            .iter()
            .map(|&w| {
                let d = [
                    coords[w][0] - coords[v][0],
                    coords[w][1] - coords[v][1],
                    coords[w][2] - coords[v][2],
                ];
                let x = d[0] * e1[0] + d[1] * e1[1] + d[2] * e1[2];
                let y = d[0] * e2[0] + d[1] * e2[1] + d[2] * e2[2];
                (libm::atan2(y, x), w)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite angles"));
        *nb = keyed.into_iter().map(|(_, w)| w).collect();
    }
    PlanarMap::new(adj)
}

/// The five Platonic maps, generated from standard coordinate models.
pub fn platonic_maps() -> Vec<(&'static str, PlanarMap)> {
    let phi = (1.0 + libm::sqrt(5.0)) / 2.0;

    let tetra = [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ];
    let cube: Vec<[f64; 3]> = (0..8)
        .map(|m| {
            [
                if m & 1 == 1 { 1.0 } else { -1.0 },
                if m & 2 == 2 { 1.0 } else { -1.0 },
                if m & 4 == 4 { 1.0 } else { -1.0 },
            ]
        })
        .collect();
    let octa = [
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ];
    let mut icosa = Vec::new();
    for &s1 in &[1.0f64, -1.0] {
        for &s2 in &[1.0f64, -1.0] {
            icosa.push([0.0, s1, s2 * phi]);
            icosa.push([s1, s2 * phi, 0.0]);
            icosa.push([s2 * phi, 0.0, s1]);
        }
    }
    let mut dodeca: Vec<[f64; 3]> = (0..8)
        .map(|m| {
            [
                if m & 1 == 1 { 1.0 } else { -1.0 },
                if m & 2 == 2 { 1.0 } else { -1.0 },
                if m & 4 == 4 { 1.0 } else { -1.0 },
            ]
        })
        .collect();
    for &s1 in &[1.0f64, -1.0] {
        for &s2 in &[1.0f64, -1.0] {
            dodeca.push([0.0, s1 / phi, s2 * phi]);
            dodeca.push([s1 / phi, s2 * phi, 0.0]);
            dodeca.push([s2 * phi, 0.0, s1 / phi]);
        }
    }

    vec![
        ("tetrahedron", from_coords_by_distance(&tetra)),
        ("cube", from_coords_by_distance(&cube)),
        ("octahedron", from_coords_by_distance(&octa)),
        ("dodecahedron", from_coords_by_distance(&dodeca)),
        ("icosahedron", from_coords_by_distance(&icosa)),
    ]
}

/// Edges = vertex pairs at the minimal pairwise distance (all Platonic
/// solids are edge-transitive, so this is exact).
fn from_coords_by_distance(coords: &[[f64; 3]]) -> PlanarMap {
    let mut dmin = f64::INFINITY;
    let dist = |a: &[f64; 3], b: &[f64; 3]| {
        libm::sqrt(
            (a[0] - b[0]) * (a[0] - b[0])
                + (a[1] - b[1]) * (a[1] - b[1])
                + (a[2] - b[2]) * (a[2] - b[2]),
        )
    };
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            let d = dist(&coords[i], &coords[j]);
            if d < dmin {
                dmin = d;
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            if dist(&coords[i], &coords[j]) < dmin * 1.01 {
                edges.push((i, j));
            }
        }
    }
    map_from_coordinates(coords, &edges).expect("platonic coordinates are valid")
}

/// Tiny deterministic generator (xorshift64*), fixed here rather than taken
/// from a library so corpus sequences never change under dependency bumps.
#[derive(Debug, Clone)]
pub struct DetRng(u64);

impl DetRng {
    /// Seeds the generator; zero is mapped to a fixed nonzero state.
    pub fn new(seed: u64) -> DetRng {
        DetRng(if seed == 0 { 0x9e3779b97f4a7c15 } else { seed })
    }

    /// Next pseudorandom value.
    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545f4914f6cdd1d)
    }

    /// Uniform value in `0..n`.
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Deterministic pseudorandom 3-connected planar map with at most
/// `max_vertices` vertices: repeated stellar subdivisions of random faces,
/// interleaved with dualizations, starting from the tetrahedron.
pub fn random_map(seed: u64, max_vertices: usize) -> PlanarMap {
    let mut rng = DetRng::new(seed);
    let mut map = platonic_maps().remove(0).1;
    for _ in 0..24 {
        let choice = rng.below(3);
        if choice == 2 {
            let d = map.dual().expect("dual of a valid map is valid");
            if d.num_vertices() <= max_vertices {
                map = d;
            }
            continue;
        }
        if map.num_vertices() + 1 <= max_vertices {
            let fi = rng.below(map.faces().len());
            map = map
                .stellar_subdivide(fi)
                .expect("stellar subdivision keeps maps valid");
        }
    }
    map
}
