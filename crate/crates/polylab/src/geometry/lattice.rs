//! Face lattice reconstruction from vertex-facet incidences.
//!
//! Faces of a polytope are closed vertex sets: intersections of facet vertex
//! sets.  Starting from the top face (all vertices), each face's children
//! are the maximal proper intersections with facet sets; breadth-first
//! search discovers every face exactly once per rank level, and a
//! consistency check rejects incidence data whose poset is not graded.

use super::GeometryError;
use crate::fvector::FVector;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;

/// All faces of a polytope, grouped by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    /// `levels[k]` lists the vertex sets of the `k`-faces, `k = 0 ..= d`;
    /// the top entry is the whole vertex set.  The empty face is implicit.
    levels: Vec<Vec<BTreeSet<usize>>>,
}

impl FaceLattice {
    /// Builds the lattice of a `d`-polytope with `nv` vertices from the
    /// facet vertex sets.
    pub fn from_incidences(
        nv: usize,
        facet_sets: &[BTreeSet<usize>],
        d: usize,
    ) -> Result<FaceLattice, GeometryError> {
        let top: BTreeSet<usize> = (0..nv).collect();
        let mut level_of: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        level_of.insert(top.clone(), d);
        let mut current = vec![top];
        while !current.is_empty() {
            let mut next: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            for face in &current {
                let rank = level_of[face];
                // candidate children: proper intersections with facet sets
                let mut children: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
                for fs in facet_sets {
                    let c: BTreeSet<usize> = face.intersection(fs).copied().collect();
                    if &c != face {
                        children.insert(c);
                    }
                }
                // keep only the inclusion-maximal ones (covers in the lattice)
                let maximal: Vec<&BTreeSet<usize>> = children
                    .iter()
                    .filter(|c| {
                        !children
                            .iter()
                            .any(|d2| *c != d2 && c.is_subset(d2))
                    })
                    .collect();
                for c in maximal {
                    if c.is_empty() {
                        // the empty face; only legal directly under rank 0
                        if rank != 0 {
                            return Err(GeometryError::NotGraded);
                        }
                        continue;
                    }
                    match level_of.get(c) {
                        Some(&r) => {
                            if r + 1 != rank {
                                return Err(GeometryError::NotGraded);
                            }
                        }
                        None => {
                            if rank == 0 {
                                return Err(GeometryError::NotGraded);
                            }
                            level_of.insert(c.clone(), rank - 1);
                            next.insert(c.clone());
                        }
                    }
                }
            }
            current = next.into_iter().collect();
        }
        let mut levels = vec![Vec::new(); d + 1];
        for (face, rank) in level_of {
            levels[rank].push(face);
        }
        // every vertex must appear as a rank-0 face
        if levels[0].len() != nv || levels[0].iter().any(|f| f.len() != 1) {
            return Err(GeometryError::NotGraded);
        }
        Ok(FaceLattice { levels })
    }

    /// Polytope dimension.
    pub fn dim(&self) -> usize {
        self.levels.len() - 1
    }

    /// Vertex sets of the `k`-faces.
    pub fn level(&self, k: usize) -> &[BTreeSet<usize>] {
        &self.levels[k]
    }

    /// The f-vector `(f_0, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Result<FVector, GeometryError> {
        let counts: Vec<BigInt> = self.levels[..self.dim()]
            .iter()
            .map(|l| BigInt::from(l.len()))
            .collect();
        FVector::new(counts).map_err(|_| GeometryError::NotGraded)
    }

    /// Number of incidences between `j`-faces and `k`-faces (`j < k`),
    /// counted by vertex-set inclusion.
    pub fn incidence_count(&self, j: usize, k: usize) -> BigInt {
        let mut n = 0u64;
        for small in self.level(j) {
            for big in self.level(k) {
                if small.is_subset(big) {
                    n += 1;
                }
            }
        }
        BigInt::from(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(xs: &[&[usize]]) -> Vec<BTreeSet<usize>> {
        xs.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn tetrahedron_lattice() {
        let facets = sets(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let lat = FaceLattice::from_incidences(4, &facets, 3).unwrap();
        assert_eq!(
            lat.f_vector().unwrap(),
            FVector::from_ints(&[4, 6, 4]).unwrap()
        );
        assert_eq!(lat.incidence_count(0, 2), BigInt::from(12));
    }

    #[test]
    fn square_pyramid_lattice() {
        let facets = sets(&[
            &[0, 1, 2, 3],
            &[0, 1, 4],
            &[1, 2, 4],
            &[2, 3, 4],
            &[0, 3, 4],
        ]);
        let lat = FaceLattice::from_incidences(5, &facets, 3).unwrap();
        assert_eq!(
            lat.f_vector().unwrap(),
            FVector::from_ints(&[5, 8, 5]).unwrap()
        );
        // apex 4 lies on 4 edges
        let apex_edges = lat
            .level(1)
            .iter()
            .filter(|e| e.contains(&4))
            .count();
        assert_eq!(apex_edges, 4);
    }

    #[test]
    fn broken_incidences_are_rejected() {
        // vertex 3 appears in no facet: gradedness check must fail
        let facets = sets(&[&[0, 1, 2], &[0, 1], &[1, 2], &[0, 2]]);
        assert!(FaceLattice::from_incidences(4, &facets, 3).is_err());
    }
}
