//! Exact f-vector algebra for polytope families and composite constructions.
//!
//! An [`FVector`] holds face counts `f_0, ..., f_{d-1}` of a `d`-polytope as
//! arbitrary-precision integers.  Closed forms are provided for simplices,
//! cross-polytopes, cubes and cyclic polytopes (the latter both via the
//! h-vector route and via explicit facet enumeration, so the two can be
//! cross-checked), plus the standard composite operations: product, join,
//! free sum, repeated stacking, gluing, and vertex truncation.  Shape
//! predicates (unimodality, dips, end-quarter monotonicity, min-entry bound)
//! operate on the exact entries.

use crate::rat::Rat;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Errors from f-vector constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FVectorError {
    /// Entries must be strictly positive counts.
    #[error("face count f_{index} = {value} is not positive")]
    NonPositiveEntry {
        /// Index of the offending entry.
        index: usize,
        /// The offending value.
        value: BigInt,
    },
    /// An f-vector of dimension 0 carries no information.
    #[error("an f-vector needs at least one entry")]
    Empty,
    /// Operation defined only in a specific dimension.
    #[error("operation requires dimension {expected}, got {got}")]
    WrongDimension {
        /// Required dimension.
        expected: usize,
        /// Actual dimension.
        got: usize,
    },
    /// Quantity undefined because a denominator vanishes.
    #[error("{name} is undefined for this polytope (denominator vanishes)")]
    Undefined {
        /// Human-readable name of the quantity.
        name: &'static str,
    },
    /// Parameters outside the valid range for a family.
    #[error("invalid parameters: {0}")]
    BadParameters(String),
}

/// The face-count vector `(f_0, ..., f_{d-1})` of a `d`-polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    entries: Vec<BigInt>,
}

impl FVector {
    /// Builds an f-vector, checking that all entries are positive.
    pub fn new(entries: Vec<BigInt>) -> Result<Self, FVectorError> {
        if entries.is_empty() {
            return Err(FVectorError::Empty);
        }
        for (index, value) in entries.iter().enumerate() {
            if !value.is_positive() {
                return Err(FVectorError::NonPositiveEntry {
                    index,
                    value: value.clone(),
                });
            }
        }
        Ok(FVector { entries })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(entries: &[i64]) -> Result<Self, FVectorError> {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Dimension `d` of the polytope described (number of entries).
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Number of `k`-dimensional faces.
    pub fn entry(&self, k: usize) -> &BigInt {
        &self.entries[k]
    }

    /// All entries `f_0, ..., f_{d-1}`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// The reversed vector: the f-vector of the polar-dual polytope.
    pub fn reversed(&self) -> FVector {
        let mut e = self.entries.clone();
        e.reverse();
        FVector { entries: e }
    }

    /// Euler–Poincaré check: the alternating sum equals `1 - (-1)^d`.
    pub fn euler_ok(&self) -> bool {
        let mut sum = BigInt::zero();
        for (k, f) in self.entries.iter().enumerate() {
            if k % 2 == 0 {
                sum += f;
            } else {
                sum -= f;
            }
        }
        let expect = if self.dim() % 2 == 0 { BigInt::zero() } else { BigInt::from(2) };
        sum == expect
    }
}

impl core::fmt::Display for FVector {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Binomial coefficient `C(n, k)` with the convention `C(n, k) = 0` for
/// `k > n`, as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// f-vector of the `d`-simplex: `f_{k-1} = C(d+1, k)`.
pub fn f_simplex(d: usize) -> Result<FVector, FVectorError> {
    if d == 0 {
        return Err(FVectorError::BadParameters(String::from("dimension must be positive")));
    }
    FVector::new((1..=d).map(|k| binomial(d + 1, k)).collect())
}

/// f-vector of the `d`-dimensional cross-polytope: `f_k = C(d, k+1) 2^{k+1}`.
pub fn f_cross(d: usize) -> Result<FVector, FVectorError> {
    if d == 0 {
        return Err(FVectorError::BadParameters(String::from("dimension must be positive")));
    }
    FVector::new(
        (0..d)
            .map(|k| binomial(d, k + 1) * BigInt::from(2).pow((k + 1) as u32))
            .collect(),
    )
}

/// f-vector of the `d`-cube (reverse of the cross-polytope's).
pub fn f_cube(d: usize) -> Result<FVector, FVectorError> {
    Ok(f_cross(d)?.reversed())
}

/// f-vector of the cyclic polytope `C_d(n)` via its h-vector:
/// `h_i = C(n-d-1+i, i)` for `i <= d/2`, mirrored by the Dehn–Sommerville
/// relations, then `f_{j-1} = sum_i C(d-i, d-j) h_i`.
pub fn f_cyclic(d: usize, n: usize) -> Result<FVector, FVectorError> {
    if d < 2 || n <= d {
        return Err(FVectorError::BadParameters(alloc::format!(
            "cyclic polytope needs n > d >= 2, got d={d}, n={n}"
        )));
    }
    let mut h = vec![BigInt::zero(); d + 1];
    for i in 0..=d / 2 {
        h[i] = binomial(n - d - 1 + i, i);
        h[d - i] = h[i].clone();
    }
    let mut f = Vec::with_capacity(d);
    for j in 1..=d {
        let mut s = BigInt::zero();
        for (i, hi) in h.iter().enumerate().take(j + 1) {
            s += binomial(d - i, d - j) * hi;
        }
        f.push(s);
    }
    FVector::new(f)
}

/// Facets of the cyclic polytope `C_d(n)` on vertices `0..n` by the evenness
/// criterion: a `d`-subset `S` is a facet iff any two elements outside `S`
/// are separated by an even number of elements of `S`.  Facets are returned
/// as sorted index lists in lexicographic order.
pub fn gale_facets(d: usize, n: usize) -> Result<Vec<Vec<usize>>, FVectorError> {
    if d < 2 || n <= d {
        return Err(FVectorError::BadParameters(alloc::format!(
            "cyclic polytope needs n > d >= 2, got d={d}, n={n}"
        )));
    }
    let mut facets = Vec::new();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        if gale_even(&subset, n) {
            facets.push(subset.clone());
        }
        // next lexicographic d-subset of {0..n-1}
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(facets);
            }
            i -= 1;
            if subset[i] != i + n - d {
                subset[i] += 1;
                for j in i + 1..d {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn gale_even(s: &[usize], n: usize) -> bool {
    let mut inside = vec![false; n];
    for &i in s {
        inside[i] = true;
    }
    // prefix counts of elements of S
    let mut pref = vec![0usize; n + 1];
    for i in 0..n {
        pref[i + 1] = pref[i] + usize::from(inside[i]);
    }
    let outside: Vec<usize> = (0..n).filter(|&i| !inside[i]).collect();
    for a in 0..outside.len() {
        for b in a + 1..outside.len() {
            let (i, j) = (outside[a], outside[b]);
            if (pref[j] - pref[i + 1]) % 2 == 1 {
                return false;
            }
        }
    }
    true
}

/// f-vector of a simplicial polytope from its facet list: every subset of a
/// facet is a face, so faces are exactly the distinct subsets.  `d` is the
/// dimension (facets must all have `d` vertices).
pub fn faces_by_enumeration(facets: &[Vec<usize>], d: usize) -> Result<FVector, FVectorError> {
    use alloc::collections::BTreeSet;
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for facet in facets {
        if facet.len() != d {
            return Err(FVectorError::BadParameters(alloc::format!(
                "facet {:?} does not have {d} vertices",
                facet
            )));
        }
        // enumerate nonempty subsets
        for mask in 1u64..(1u64 << d) {
            let sub: Vec<usize> = (0..d).filter(|&i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
            faces.insert(sub);
        }
    }
    let mut f = vec![BigInt::zero(); d];
    for face in &faces {
        f[face.len() - 1] += 1;
    }
    FVector::new(f)
}

/// f-vector of a cartesian product.  Uses the convolution
/// `f_m(P x Q) = sum_{k+l=m} f_k(P) f_l(Q)` with `f_dim = 1` for each factor.
pub fn f_product(p: &FVector, q: &FVector) -> FVector {
    let (dp, dq) = (p.dim(), q.dim());
    let fp = with_top(p);
    let fq = with_top(q);
    let mut out = Vec::with_capacity(dp + dq);
    for m in 0..dp + dq {
        let mut s = BigInt::zero();
        for k in 0..=m.min(dp) {
            let l = m - k;
            if l <= dq {
                s += &fp[k] * &fq[l];
            }
        }
        out.push(s);
    }
    FVector { entries: out }
}

/// f-vector of a join.  Faces of the join are joins of faces (the empty face
/// included): `f_m(P * Q) = sum_{k+l=m-1} f_k(P) f_l(Q)` with `f_{-1} = 1`
/// and top faces included on both sides.
pub fn f_join(p: &FVector, q: &FVector) -> FVector {
    let (dp, dq) = (p.dim(), q.dim());
    let mut fp = vec![BigInt::one()];
    fp.extend_from_slice(&with_top(p));
    let mut fq = vec![BigInt::one()];
    fq.extend_from_slice(&with_top(q));
    // fp[k+1] = f_k, k from -1 to dp
    let d = dp + dq + 1;
    let mut out = Vec::with_capacity(d);
    for m in 0..d {
        let mut s = BigInt::zero();
        for k in 0..=m + 1 {
            let l = m + 1 - k; // (k-1) + (l-1) = m - 1
            if k < fp.len() && l < fq.len() && !(k == fp.len() - 1 && l == fq.len() - 1) {
                s += &fp[k] * &fq[l];
            }
        }
        // the top face of the join (P * Q itself) was excluded by the guard;
        // proper faces only, so m = d entries never appear here.
        out.push(s);
    }
    FVector { entries: out }
}

/// f-vector of a free sum (dual of the product of the duals).
pub fn f_free_sum(p: &FVector, q: &FVector) -> FVector {
    f_product(&p.reversed(), &q.reversed()).reversed()
}

fn with_top(f: &FVector) -> Vec<BigInt> {
    let mut v = f.entries.clone();
    v.push(BigInt::one());
    v
}

/// f-vector after stacking a pyramid onto a simplicial facet `N` times:
/// `f_k += N * f_{k-1}(simplex_{d-1})` for `k <= d-2`, and the facet count
/// grows by `d-1` per step (one facet destroyed, `d` created).
///
/// Requires the polytope to have a simplicial facet at every step; stacked
/// facets are simplices, so one initial simplicial facet suffices.
pub fn f_stack(f: &FVector, n: &BigInt) -> FVector {
    let d = f.dim();
    let mut out = f.entries.clone();
    // each step adds a pyramid over every proper face of the destroyed
    // (d-1)-simplex facet: C(d, k) new k-faces for k <= d-2 (the apex at k=0),
    // and d new facets replacing one old facet.
    for (k, e) in out.iter_mut().enumerate().take(d - 1) {
        *e += n * binomial(d, k);
    }
    out[d - 1] += n * BigInt::from(d as i64 - 1);
    FVector { entries: out }
}

/// f-vector after gluing two `d`-polytopes along a (projectively adjusted)
/// common simplicial facet: `f_k = f_k(P) + f_k(P') - f_k(simplex_{d-1})`
/// for `k <= d-2`, and the two glued facets vanish.
pub fn f_glue(p: &FVector, q: &FVector) -> Result<FVector, FVectorError> {
    let d = p.dim();
    if q.dim() != d {
        return Err(FVectorError::WrongDimension { expected: d, got: q.dim() });
    }
    let mut out = Vec::with_capacity(d);
    for k in 0..d - 1 {
        out.push(&p.entries[k] + &q.entries[k] - binomial(d, k + 1));
    }
    out.push(&p.entries[d - 1] + &q.entries[d - 1] - BigInt::from(2));
    FVector::new(out)
}

/// f-vector after truncating one simple vertex: the vertex is replaced by a
/// small simplex facet, so `f_0 += d-1` and `f_k += f_k(simplex_{d-1})` for
/// `1 <= k <= d-1`.
pub fn f_truncate_vertex(f: &FVector) -> FVector {
    let d = f.dim();
    let mut out = f.entries.clone();
    out[0] += BigInt::from(d as i64 - 1);
    for (k, e) in out.iter_mut().enumerate().take(d).skip(1) {
        *e += binomial(d, k + 1);
    }
    FVector { entries: out }
}

/// Membership in the f-vector set of 3-polytopes:
/// `f_0 - f_1 + f_2 = 2`, `f_2 <= 2 f_0 - 4`, and `f_0 <= 2 f_2 - 4`.
pub fn steinitz_member(f0: i64, f1: i64, f2: i64) -> bool {
    f0 - f1 + f2 == 2 && f2 <= 2 * f0 - 4 && f0 <= 2 * f2 - 4
}

/// Slope `(f_2 - 4) / (f_0 - 4)` of a 3-polytope f-vector; undefined for the
/// tetrahedron.
pub fn slope_phi(f: &FVector) -> Result<Rat, FVectorError> {
    if f.dim() != 3 {
        return Err(FVectorError::WrongDimension { expected: 3, got: f.dim() });
    }
    let four = BigInt::from(4);
    let den = f.entry(0) - &four;
    if den.is_zero() {
        return Err(FVectorError::Undefined { name: "slope" });
    }
    Ok(Rat::new(f.entry(2) - &four, den))
}

/// Imbalance `(f_2 - f_0) / (f_1 - 6)` of a 3-polytope f-vector; undefined
/// for the tetrahedron.
pub fn imbalance_sigma(f: &FVector) -> Result<Rat, FVectorError> {
    if f.dim() != 3 {
        return Err(FVectorError::WrongDimension { expected: 3, got: f.dim() });
    }
    let den = f.entry(1) - BigInt::from(6);
    if den.is_zero() {
        return Err(FVectorError::Undefined { name: "imbalance" });
    }
    Ok(Rat::new(f.entry(2) - f.entry(0), den))
}

/// True iff the entries rise weakly to some peak and then fall weakly.
pub fn is_unimodal(f: &FVector) -> bool {
    let e = &f.entries;
    (0..e.len()).any(|peak| {
        e.windows(2).take(peak).all(|w| w[0] <= w[1])
            && (0..e.len() - 1).skip(peak).all(|i| e[i] >= e[i + 1])
    })
}

/// Indices `k` with a strict dip `f_{k-1} > f_k < f_{k+1}`.
pub fn dips(f: &FVector) -> Vec<usize> {
    let e = &f.entries;
    (1..e.len().saturating_sub(1))
        .filter(|&k| e[k - 1] > e[k] && e[k] < e[k + 1])
        .collect()
}

/// Strict monotonicity on the outer quarters: `f_0 < ... < f_q` with
/// `q = ceil((d-1)/4)`, and `f_p > ... > f_{d-1}` with `p = floor(3(d-1)/4)`.
pub fn bjorner_quarters(f: &FVector) -> bool {
    let e = &f.entries;
    let d = e.len();
    let q = (d - 1).div_ceil(4);
    let p = 3 * (d - 1) / 4;
    (0..q).all(|i| e[i] < e[i + 1]) && (p..d - 1).all(|i| e[i] > e[i + 1])
}

/// Lower bound check: every entry is at least `min(f_0, f_{d-1})`.
pub fn barany_bound(f: &FVector) -> bool {
    let m = f.entries.first().unwrap().min(f.entries.last().unwrap());
    f.entries.iter().all(|x| x >= m)
}
