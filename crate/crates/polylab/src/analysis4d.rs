//! Size-free shape analytics for 4-polytopes.
//!
//! A 4-polytope with flag data `(f_0, f_1, f_2, f_3; f_03)` is summarized by
//! projective invariants: the phi-coordinate pair locating it in a triangle
//! spanned by "pointy", "dually pointy" and "round" extremes, plus fatness
//! and complexity quotients.  All quantities are exact rationals; degenerate
//! denominators (only the simplex) are reported as errors.

use crate::fvector::FVector;
use crate::rat::Rat;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Errors from 4-dimensional analytics.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Analysis4Error {
    /// The input was not the f-vector of a 4-polytope.
    #[error("expected a 4-dimensional f-vector, got dimension {0}")]
    NotFourDimensional(usize),
    /// The normalizing denominator vanishes (exactly for the simplex).
    #[error("invariant undefined: {0} vanishes (the polytope is a simplex)")]
    SimplexDegenerate(&'static str),
    /// Flag count inconsistent with the f-vector.
    #[error("flag count f_03 = {0} is impossible: {1}")]
    BadFlagCount(BigInt, &'static str),
}

/// f-vector of a 4-polytope together with the vertex-facet incidence count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagData4 {
    /// Face counts `(f_0, f_1, f_2, f_3)`.
    pub f: FVector,
    /// Number of vertex-facet incidences `f_03`.
    pub f03: BigInt,
}

impl FlagData4 {
    /// Builds flag data, validating dimension and basic bounds:
    /// every facet is a 3-polytope with at least 4 vertices (`f_03 >= 4 f_3`)
    /// and every vertex figure likewise (`f_03 >= 4 f_0`).
    pub fn new(f: FVector, f03: BigInt) -> Result<Self, Analysis4Error> {
        if f.dim() != 4 {
            return Err(Analysis4Error::NotFourDimensional(f.dim()));
        }
        if &f03 < &(f.entry(3) * BigInt::from(4)) {
            return Err(Analysis4Error::BadFlagCount(
                f03,
                "every facet of a 4-polytope has at least 4 vertices",
            ));
        }
        if &f03 < &(f.entry(0) * BigInt::from(4)) {
            return Err(Analysis4Error::BadFlagCount(
                f03,
                "every vertex of a 4-polytope lies on at least 4 facets",
            ));
        }
        Ok(FlagData4 { f, f03 })
    }

    /// Vertex-edge incidences `f_01 = 2 f_1` (every edge has two ends).
    pub fn f01(&self) -> BigInt {
        self.f.entry(1) * BigInt::from(2)
    }

    /// Ridge-facet incidences `f_23 = 2 f_2`.
    pub fn f23(&self) -> BigInt {
        self.f.entry(2) * BigInt::from(2)
    }

    /// Edge-facet incidences via the generalized Dehn–Sommerville relation
    /// `f_13 = f_03 + 2 f_2 - 2 f_3`.
    pub fn f13(&self) -> BigInt {
        &self.f03 + self.f.entry(2) * BigInt::from(2) - self.f.entry(3) * BigInt::from(2)
    }

    /// Vertex-ridge incidences, dually: `f_02 = f_03 + 2 f_1 - 2 f_0`.
    pub fn f02(&self) -> BigInt {
        &self.f03 + self.f.entry(1) * BigInt::from(2) - self.f.entry(0) * BigInt::from(2)
    }

    /// True iff every facet is a simplex (then `f_03 = 4 f_3`).
    pub fn simplicial(&self) -> bool {
        self.f03 == self.f.entry(3) * BigInt::from(4)
    }

    /// True iff every vertex figure is a simplex (then `f_03 = 4 f_0`).
    pub fn simple(&self) -> bool {
        self.f03 == self.f.entry(0) * BigInt::from(4)
    }

    /// True iff all 2-faces are triangles (`f_02 = 3 f_2`).
    pub fn two_simplicial(&self) -> bool {
        self.f02() == self.f.entry(2) * BigInt::from(3)
    }

    /// True iff all edges lie on exactly three facets (`f_13 = 3 f_1`).
    pub fn two_simple(&self) -> bool {
        self.f13() == self.f.entry(1) * BigInt::from(3)
    }
}

/// Shape summary of a 4-polytope in exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape4 {
    /// Normalized vertex share `phi_0 = (f_0 - 5) / (f_1 + f_2 - 20)`.
    pub phi0: Rat,
    /// Normalized facet share `phi_3 = (f_3 - 5) / (f_1 + f_2 - 20)`.
    pub phi3: Rat,
    /// Fatness `(f_1 + f_2 - 20) / (f_0 + f_3 - 10)`.
    pub fatness: Rat,
    /// Complexity `(f_03 - 20) / (f_0 + f_3 - 10)`, when flag data is known.
    pub complexity: Option<Rat>,
}

/// Computes the phi-coordinates and fatness of a 4-polytope f-vector, and
/// the complexity when `f03` is supplied.
pub fn shape4(f: &FVector, f03: Option<&BigInt>) -> Result<Shape4, Analysis4Error> {
    if f.dim() != 4 {
        return Err(Analysis4Error::NotFourDimensional(f.dim()));
    }
    let five = BigInt::from(5);
    let edge_ridge = f.entry(1) + f.entry(2) - BigInt::from(20);
    if edge_ridge.is_zero() {
        return Err(Analysis4Error::SimplexDegenerate("f_1 + f_2 - 20"));
    }
    let vertex_facet = f.entry(0) + f.entry(3) - BigInt::from(10);
    if vertex_facet.is_zero() {
        return Err(Analysis4Error::SimplexDegenerate("f_0 + f_3 - 10"));
    }
    Ok(Shape4 {
        phi0: Rat::new(f.entry(0) - &five, edge_ridge.clone()),
        phi3: Rat::new(f.entry(3) - &five, edge_ridge.clone()),
        fatness: Rat::new(edge_ridge, vertex_facet.clone()),
        complexity: f03.map(|x| Rat::new(x - BigInt::from(20), vertex_facet)),
    })
}

/// The four linear conditions cutting out the pentagon that contains all
/// known phi-coordinate pairs of 4-polytopes:
/// `phi_0 >= 0`, `phi_3 >= 0`, `3 phi_0 + phi_3 <= 1`, `phi_0 + 3 phi_3 <= 1`,
/// and the fatness-derived cap `phi_0 + phi_3 <= 2/5`.
pub fn in_pentagon(phi0: &Rat, phi3: &Rat) -> bool {
    let one = crate::rat::int(1);
    let three = crate::rat::int(3);
    !phi0.is_negative()
        && !phi3.is_negative()
        && &three * phi0 + phi3 <= one
        && phi0 + &three * phi3 <= one
        && phi0 + phi3 <= crate::rat::frac(2, 5)
}

/// Exact check of the flag inequality
/// `2 f_03 >= f_1 + f_2 + 2 (f_0 + f_3)`; returns `(holds, tight)`.
/// Tightness characterizes the 2-simplicial 2-simple polytopes.
pub fn flag_lower_bound(d: &FlagData4) -> (bool, bool) {
    let lhs = &d.f03 * BigInt::from(2);
    let rhs = d.f.entry(1) + d.f.entry(2) + (d.f.entry(0) + d.f.entry(3)) * BigInt::from(2);
    (lhs >= rhs, lhs == rhs)
}

/// Exact check of `fatness <= 2 * complexity - 2` (as cleared-denominator
/// integers); returns `(holds, tight)`.
pub fn fatness_complexity_bound(d: &FlagData4) -> (bool, bool) {
    // (f1+f2-20) <= 2 (f03-20) - 2 (f0+f3-10),  both sides times the
    // positive denominator f0+f3-10
    let lhs = d.f.entry(1) + d.f.entry(2) - BigInt::from(20);
    let rhs = (&d.f03 - BigInt::from(20)) * BigInt::from(2)
        - (d.f.entry(0) + d.f.entry(3) - BigInt::from(10)) * BigInt::from(2);
    (lhs <= rhs, lhs == rhs)
}

/// Flag data of well-known 4-polytopes, used as fixed points in tests and
/// reports: returns `(f, f03)` for a name among
/// `"simplex" | "cube" | "cross" | "hypersimplex" | "24-cell"`.
pub fn named_flag_data(name: &str) -> Option<FlagData4> {
    let (f, f03): (&[i64], i64) = match name {
        "simplex" => (&[5, 10, 10, 5], 20),
        "cube" => (&[16, 32, 24, 8], 64),
        "cross" => (&[8, 24, 32, 16], 64),
        "hypersimplex" => (&[10, 30, 30, 10], 50),
        "24-cell" => (&[24, 96, 96, 24], 144),
        _ => return None,
    };
    FlagData4::new(FVector::from_ints(f).ok()?, BigInt::from(f03)).ok()
}

/// Collects the standard invariant report rows for a list of flag data.
pub fn shape_rows(items: &[(&str, FlagData4)]) -> Vec<(alloc::string::String, Shape4)> {
    items
        .iter()
        .filter_map(|(name, d)| {
            shape4(&d.f, Some(&d.f03))
                .ok()
                .map(|s| (alloc::string::String::from(*name), s))
        })
        .collect()
}
