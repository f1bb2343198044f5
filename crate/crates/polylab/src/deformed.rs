//! Projected deformed products of polygons.
//!
//! A deformed product of `r` even-sided `n`-gons is a simple `2r`-polytope
//! with `r n` facets and `n^r` vertices whose facet matrix is block
//! lower-triangular: each polygon block is a flattened `n`-gon (alternating
//! long and short edges), and the sub-diagonal blocks deform later polygons
//! relative to earlier ones.  With the deformation tuned correctly, the
//! projection to the last four coordinates keeps every vertex and every
//! edge, producing 4-polytopes with `n^r` vertices whose fatness approaches
//! 9 as `r` grows.
//!
//! Everything here is exact.  [`deformed_product`] searches the two scale
//! parameters (polygon flattening `eps`, block scale `M`) with separate
//! verifiers: the product structure fixes `M`, the survival of vertices and
//! edges under projection fixes `eps`.

use crate::fvector::FVector;
use crate::geometry::{predicates, GeometryError, Polytope};
use crate::rat::{self, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Errors from the deformed-product constructions.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DeformedError {
    /// Unsupported shape parameters.
    #[error("need r >= 2 and even n >= 4, got r = {0}, n = {1}")]
    BadShape(usize, usize),
    /// The parameter search did not terminate.
    #[error("no (eps, M) pair found after {0} adjustments")]
    NoParameters(usize),
    /// Downstream polytope computation failed.
    #[error("geometry: {0}")]
    Geometry(#[from] GeometryError),
}

/// Rational point on the unit circle with tangent-half-angle parameter `t`.
fn circ_point(t: &Rat) -> [Rat; 2] {
    let den = rat::int(1) + t * t;
    [(rat::int(1) - t * t) / &den, (rat::int(2) * t) / &den]
}

/// H-representation of a flattened `n`-gon: `n` tangent lines to the unit
/// circle at rational points, alternating long rows (unit normal, right
/// side 1) and short rows (scaled by `eps`, right side `eps`), in cyclic
/// order.  All `n` lines are facets for every `eps` in `(0, 1)`.
pub fn ngon_hrep(n: usize, eps: &Rat) -> (Vec<[Rat; 2]>, Vec<Rat>) {
    assert!(n % 2 == 0 && n >= 4, "even n >= 4");
    let m = (n / 2) as i64;
    let mut rows = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for s in 0..m {
        let p = circ_point(&(eps * rat::int(2 * s - m + 1)));
        rows.push(p);
        rhs.push(rat::int(1));
        if s < m - 1 {
            let q = circ_point(&(eps * rat::int(2 * s - m + 2)));
            rows.push([eps * &q[0], eps * &q[1]]);
        } else {
            rows.push([-eps.clone(), Rat::zero()]);
        }
        rhs.push(eps.clone());
    }
    (rows, rhs)
}

/// The deformation coefficients of the sub-diagonal blocks, chosen so that
/// the projection to the last four coordinates preserves all vertices and
/// edges once the scales are right.  Rows below a polygon block alternate
/// `(0, 1) / (a, b)` one block down and `(c, d) / (e, f)` two blocks down.
const DEFORM: [(i64, i64); 6] = [(-15, 4), (-2, 1), (11, 4), (1, 2), (-15, 8), (-1, 4)];

/// A verified deformed product of `r` `n`-gons: `r n` inequalities
/// `row . x <= rhs` in `2r` variables.
#[derive(Debug, Clone)]
pub struct DeformedProduct {
    /// Number of polygon factors.
    pub r: usize,
    /// Polygon size (even, at least 4).
    pub n: usize,
    /// Polygon flattening parameter.
    pub eps: Rat,
    /// Block scale between consecutive polygon factors.
    pub scale: Rat,
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
}

fn build(r: usize, n: usize, eps: &Rat, m: &Rat) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    let [a, b, c, d, e, f] = DEFORM.map(|(p, q)| rat::frac(p, q));
    let (zero, one) = (Rat::zero(), Rat::one());
    let (v, brow) = ngon_hrep(n, eps);
    let mut rows = Vec::with_capacity(r * n);
    let mut rhs = Vec::with_capacity(r * n);
    let mut scale = Rat::one();
    for bi in 0..r {
        for j in 0..n {
            let mut row = vec![Rat::zero(); 2 * r];
            row[2 * bi] = v[j][0].clone();
            row[2 * bi + 1] = v[j][1].clone();
            if bi >= 1 {
                let w: [&Rat; 2] = if j % 2 == 0 { [&zero, &one] } else { [&a, &b] };
                row[2 * bi - 2] = w[0].clone();
                row[2 * bi - 1] = w[1].clone();
            }
            if bi >= 2 {
                let u: [&Rat; 2] = if j % 2 == 0 { [&c, &d] } else { [&e, &f] };
                row[2 * bi - 4] = u[0].clone();
                row[2 * bi - 3] = u[1].clone();
            }
            rows.push(row);
            rhs.push(&scale * &brow[j]);
        }
        scale *= m;
    }
    (rows, rhs)
}

/// Runs `body` for every choice vector in `{0..n}^len`; stops early and
/// returns false if `body` does.
fn all_choices(len: usize, n: usize, mut body: impl FnMut(&[usize]) -> bool) -> bool {
    let mut digits = vec![0usize; len];
    loop {
        if !body(&digits) {
            return false;
        }
        let mut k = 0;
        while k < len {
            digits[k] += 1;
            if digits[k] < n {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
        if k == len {
            return true;
        }
    }
}

fn solve_vertex(rows: &[Vec<Rat>], rhs: &[Rat], choice: &[usize], n: usize) -> Vec<Rat> {
    let r = choice.len();
    let mut x: Vec<Rat> = Vec::with_capacity(2 * r);
    for (bi, &k) in choice.iter().enumerate() {
        let i1 = bi * n + k;
        let i2 = bi * n + (k + 1) % n;
        let mut bb = Vec::with_capacity(2);
        for &i in &[i1, i2] {
            let mut acc = rhs[i].clone();
            for (xk, rk) in x.iter().zip(&rows[i]) {
                acc -= rk * xk;
            }
            bb.push(acc);
        }
        let (a00, a01) = (&rows[i1][2 * bi], &rows[i1][2 * bi + 1]);
        let (a10, a11) = (&rows[i2][2 * bi], &rows[i2][2 * bi + 1]);
        let det = a00 * a11 - a01 * a10;
        debug_assert!(!det.is_zero());
        x.push((&bb[0] * a11 - a01 * &bb[1]) / &det);
        x.push((a00 * &bb[1] - &bb[0] * a10) / &det);
    }
    x
}

/// Checks that the inequality system has exactly the face structure of the
/// product of `r` `n`-gons: for every choice of one edge pair per block,
/// the candidate vertex satisfies its `2r` chosen rows with equality and
/// every other row strictly.
fn verify_product(rows: &[Vec<Rat>], rhs: &[Rat], r: usize, n: usize) -> bool {
    all_choices(r, n, |choice| {
        let x = solve_vertex(rows, rhs, choice, n);
        let mut chosen = vec![false; rows.len()];
        for (bi, &k) in choice.iter().enumerate() {
            chosen[bi * n + k] = true;
            chosen[bi * n + (k + 1) % n] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            let s = crate::linalg::dot(row, &x);
            if chosen[i] {
                if s != rhs[i] {
                    return false;
                }
            } else if s >= rhs[i] {
                return false;
            }
        }
        true
    })
}

/// Checks that every vertex and edge survives the projection to the last
/// four coordinates: for each edge (one free block `t`, one chosen edge
/// pair in every other block) the chosen rows, truncated to the deleted
/// coordinates, positively span that space.
fn verify_survival(rows: &[Vec<Rat>], r: usize, n: usize) -> bool {
    let mdim = 2 * r - 4;
    if mdim == 0 {
        return true;
    }
    for t in 0..r {
        let blocks: Vec<usize> = (0..r).filter(|&bi| bi != t).collect();
        let ok = all_choices(blocks.len(), n, |choice| {
            let mut vecs = Vec::with_capacity(2 * blocks.len());
            for (&bi, &k) in blocks.iter().zip(choice) {
                for i in [bi * n + k, bi * n + (k + 1) % n] {
                    vecs.push(rows[i][..mdim].to_vec());
                }
            }
            predicates::positively_spans(&vecs, mdim)
        });
        if !ok {
            return false;
        }
    }
    true
}

/// Builds and verifies a deformed product, adjusting the two scales
/// independently: the block scale `M` doubles while the product structure
/// fails, the flattening `eps` halves while projection survival fails.
/// The two cannot be coupled, since the structure needs `M` large relative
/// to `1/eps`.
pub fn deformed_product(r: usize, n: usize) -> Result<DeformedProduct, DeformedError> {
    if r < 2 || n < 4 || n % 2 != 0 {
        return Err(DeformedError::BadShape(r, n));
    }
    let mut eps = rat::frac(1, 4);
    let mut m = rat::int(256);
    let budget = 40;
    for _ in 0..budget {
        let (rows, rhs) = build(r, n, &eps, &m);
        if !verify_product(&rows, &rhs, r, n) {
            m *= rat::int(2);
            continue;
        }
        if !verify_survival(&rows, r, n) {
            eps /= rat::int(2);
            continue;
        }
        return Ok(DeformedProduct {
            r,
            n,
            eps,
            scale: m,
            rows,
            rhs,
        });
    }
    Err(DeformedError::NoParameters(budget))
}

impl DeformedProduct {
    /// The inequality rows `row . x <= rhs(i)`.
    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Right-hand sides.
    pub fn rhs(&self) -> &[Rat] {
        &self.rhs
    }

    /// The vertex selected by one edge pair per block.
    pub fn vertex(&self, choice: &[usize]) -> Vec<Rat> {
        solve_vertex(&self.rows, &self.rhs, choice, self.n)
    }

    /// All `n^r` vertices, in mixed-radix choice order.
    pub fn vertices(&self) -> Vec<Vec<Rat>> {
        let mut out = Vec::with_capacity(self.n.pow(self.r as u32));
        all_choices(self.r, self.n, |choice| {
            out.push(self.vertex(choice));
            true
        });
        out
    }

    /// Re-runs both verifiers on the stored system and reports
    /// `(product structure holds, projection survival holds)`.  Both are
    /// true for any value returned by [`deformed_product`].
    pub fn verify(&self) -> (bool, bool) {
        (
            verify_product(&self.rows, &self.rhs, self.r, self.n),
            verify_survival(&self.rows, self.r, self.n),
        )
    }

    /// The projection to the last four coordinates, as an exact polytope
    /// (the hull of the projected vertices).
    pub fn projected(&self) -> Result<Polytope, DeformedError> {
        let pts: Vec<Vec<Rat>> = self
            .vertices()
            .into_iter()
            .map(|v| v[2 * self.r - 4..].to_vec())
            .collect();
        Ok(Polytope::hull(&pts)?)
    }
}

/// The face counts of the projected deformed product:
/// `(n^r, r n^r, (5r/4 - 3/2) n^r + r n^(r-1), (r-2) n^r / 4 + r n^(r-1))`.
pub fn f_projected_product(r: usize, n: usize) -> FVector {
    let nr = BigInt::from(n).pow(r as u32);
    let nr1 = BigInt::from(n).pow(r as u32 - 1);
    let rr = BigInt::from(r);
    let f0 = nr.clone();
    let f1 = &rr * &nr;
    let f2 = (&rr * &nr * 5u32 - &nr * 6u32) / 4u32 + &rr * &nr1;
    let f3 = (&rr - 2u32) * &nr / 4u32 + &rr * &nr1;
    FVector::new(vec![f0, f1, f2, f3]).expect("counts are positive")
}

/// Counts facets of a 4-polytope by their 3-dimensional face counts:
/// combinatorial cubes `(8, 12, 6)` and `n`-gonal prisms `(2n, 3n, n+2)`.
/// Returns `(cubes, prisms, other)`; for `n = 4` the two classes coincide
/// and everything matching lands in the cube count.
pub fn facet_census(poly: &Polytope, n: usize) -> Result<(usize, usize, usize), DeformedError> {
    let cube = FVector::from_ints(&[8, 12, 6]).expect("cube counts");
    let prism = FVector::from_ints(&[2 * n as i64, 3 * n as i64, n as i64 + 2]).expect("prism");
    let mut cubes = 0;
    let mut prisms = 0;
    let mut other = 0;
    for i in 0..poly.facets().len() {
        let (fp, _) = poly.facet_as_polytope(i)?;
        let f = fp.f_vector()?;
        if f == cube {
            cubes += 1;
        } else if f == prism {
            prisms += 1;
        } else {
            other += 1;
        }
    }
    Ok((cubes, prisms, other))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::equiv::combinatorially_equivalent;

    #[test]
    fn flattened_polygons_have_all_facets() {
        for n in [4usize, 6, 8] {
            let (rows, rhs) = ngon_hrep(n, &rat::frac(1, 4));
            let ineq: Vec<Vec<Rat>> = rows
                .iter()
                .zip(&rhs)
                .map(|(row, b)| vec![b.clone(), -&row[0], -&row[1]])
                .collect();
            let p = Polytope::from_inequalities(&ineq).unwrap();
            assert_eq!(p.vertices().len(), n, "n = {n}");
            assert_eq!(p.facets().len(), n, "n = {n}");
        }
    }

    #[test]
    fn projected_face_counts_match_the_closed_form() {
        let cases = [
            ((2usize, 4usize), [16i64, 32, 24, 8]),
            ((3, 4), [64, 192, 192, 64]),
            ((3, 6), [216, 648, 594, 162]),
            ((4, 4), [256, 1024, 1152, 384]),
        ];
        for ((r, n), f) in cases {
            assert_eq!(
                f_projected_product(r, n),
                FVector::from_ints(&f).unwrap(),
                "(r, n) = ({r}, {n})"
            );
        }
    }

    #[test]
    fn two_squares_project_to_the_4_cube() {
        let dp = deformed_product(2, 4).unwrap();
        assert_eq!(dp.eps, rat::frac(1, 4));
        assert_eq!(dp.scale, rat::int(256));
        let p = dp.projected().unwrap();
        assert_eq!(p.f_vector().unwrap(), f_projected_product(2, 4));
        let corners: Vec<Vec<Rat>> = (0..16u32)
            .map(|mask| (0..4).map(|b| rat::int(((mask >> b) & 1) as i64)).collect())
            .collect();
        let cube4 = Polytope::hull(&corners).unwrap();
        assert!(combinatorially_equivalent(&p, &cube4));
        let (cubes, prisms, other) = facet_census(&p, 4).unwrap();
        assert_eq!((cubes + prisms, other), (8, 0));
    }

    #[test]
    fn three_squares_build_with_the_expected_parameters() {
        let dp = deformed_product(3, 4).unwrap();
        assert_eq!(dp.eps, rat::frac(1, 16));
        assert_eq!(dp.scale, rat::int(65536));
        let p = dp.projected().unwrap();
        assert_eq!(p.f_vector().unwrap(), f_projected_product(3, 4));
        let (cubes, prisms, other) = facet_census(&p, 4).unwrap();
        assert_eq!((cubes + prisms, other), (64, 0));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            deformed_product(1, 4),
            Err(DeformedError::BadShape(1, 4))
        ));
        assert!(matches!(
            deformed_product(2, 5),
            Err(DeformedError::BadShape(2, 5))
        ));
    }
}

