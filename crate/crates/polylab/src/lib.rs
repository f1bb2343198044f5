//! Exact polytope construction, realization, and f-vector analysis.
//!
//! This crate is the computational core of a small workbench for convex
//! polytopes.  It provides:
//!
//! * an exact rational geometry kernel ([`geometry`]): convex hulls, vertex
//!   enumeration, face lattices, polarity and projections, all over
//!   arbitrary-precision rationals;
//! * combinatorial maps of 3-connected planar graphs ([`planar`]) together
//!   with the quad-graph machinery needed for circle patterns;
//! * a circle-packing solver ([`packing`]) based on a convex functional, and
//!   the lift from plane patterns to edge-tangent 3-polytopes ([`realize`]),
//!   including an independent spring-embedding/lifting cross-check;
//! * exact f-vector algebra for standard polytope families and composite
//!   constructions ([`fvector`]), with shape predicates;
//! * flag-vector analytics for 4-polytopes ([`analysis4d`]) and exact
//!   constructions of notable 4-polytopes ([`construct4d`]);
//! * deformed products of polygons with prescribed projection behaviour
//!   ([`deformed`]).
//!
//! The crate is `no_std` (it requires `alloc`); everything numeric is either
//! exact rational arithmetic or explicitly tolerance-driven floating point,
//! and all containers are ordered so results are deterministic.

#![no_std]
#![forbid(unsafe_code)]
#![deny(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis4d;
pub mod construct4d;
pub mod deformed;
pub mod fvector;
pub mod geometry;
pub mod linalg;
pub mod lp;
pub mod packing;
pub mod planar;
pub mod rat;
pub mod realize;
