//! Simplicial complexes stored as facet antichains.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{maximalize, VertexSet, MAX_VERTICES};

/// A simplicial complex on the ground set `0..ground_n`, given by its facets.
///
/// The void complex (no faces) has no facets; the irrelevant complex `{∅}`
/// has the single facet `∅`. They are different complexes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground_n: usize,
    facets: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexStats {
    /// `None` for the void complex, `-1` for `{∅}`.
    pub dimension: Option<i64>,
    pub is_pure: bool,
    pub is_simplex: bool,
    pub facet_count: usize,
    /// `f_vector[k]` counts faces with `k` vertices, starting at the empty face.
    pub f_vector: Vec<u64>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; only the inclusion-maximal members are kept.
    pub fn from_facets<I>(ground_n: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if ground_n > MAX_VERTICES {
            return Err(Error::TooManyVertices(ground_n));
        }
        let ground = VertexSet::full(ground_n);
        let faces: Vec<VertexSet> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(ground)) {
            let label = bad.difference(ground).first().unwrap() + 1;
            return Err(Error::VertexOutOfRange { label, n: ground_n });
        }
        Ok(SimplicialComplex {
            ground_n,
            facets: maximalize(faces),
        })
    }

    pub(crate) fn from_antichain_unchecked(ground_n: usize, facets: Vec<VertexSet>) -> Self {
        SimplicialComplex {
            ground_n,
            facets: maximalize(facets),
        }
    }

    pub fn void(ground_n: usize) -> Self {
        SimplicialComplex {
            ground_n,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(ground_n: usize) -> Self {
        SimplicialComplex {
            ground_n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    pub fn simplex(ground_n: usize, vertices: VertexSet) -> Result<Self> {
        Self::from_facets(ground_n, [vertices])
    }

    /// `Ind(G)`: the complex of independent sets of `g`.
    pub fn independence_complex(g: &Graph) -> Self {
        SimplicialComplex {
            ground_n: g.ground_size(),
            facets: g.maximal_independent_sets(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_n
    }

    /// Facets sorted by bitmask.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertices that lie in some face.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn dimension(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// `lk_Δ(F) = {A ∈ Δ : A ∩ F = ∅, A ∪ F ∈ Δ}`.
    pub fn link(&self, face: VertexSet) -> Result<Self> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face.to_string()));
        }
        let facets = self
            .facets
            .iter()
            .filter(|t| face.is_subset(**t))
            .map(|t| t.difference(face))
            .collect();
        Ok(Self::from_antichain_unchecked(self.ground_n, facets))
    }

    /// `del_Δ(F) = {A ∈ Δ : A ∩ F = ∅}`.
    pub fn deletion(&self, face: VertexSet) -> Self {
        let facets = self.facets.iter().map(|t| t.difference(face)).collect();
        Self::from_antichain_unchecked(self.ground_n, facets)
    }

    /// The induced subcomplex `Δ|_W`.
    pub fn induced(&self, w: VertexSet) -> Self {
        self.deletion(VertexSet::full(self.ground_n).difference(w))
    }

    /// Every face, the empty face included unless the complex is void, sorted by bitmask.
    pub fn all_faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut out: Vec<VertexSet> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Faces with exactly `k` vertices, sorted by bitmask.
    pub fn faces_of_size(&self, k: usize) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in self.facets.iter().filter(|f| f.len() >= k) {
            for_each_k_subset(*f, k, |s| {
                seen.insert(s);
            });
        }
        let mut out: Vec<VertexSet> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// The pure `d`-skeleton: the subcomplex generated by all `d`-dimensional faces.
    pub fn pure_skeleton(&self, d: usize) -> Self {
        Self::from_antichain_unchecked(self.ground_n, self.faces_of_size(d + 1))
    }

    pub fn stats(&self) -> ComplexStats {
        let mut f_vector = vec![0u64; self.dimension().map_or(0, |d| (d + 2) as usize)];
        for face in self.all_faces() {
            f_vector[face.len()] += 1;
        }
        ComplexStats {
            dimension: self.dimension(),
            is_pure: self.is_pure(),
            is_simplex: self.is_simplex(),
            facet_count: self.facets.len(),
            f_vector,
        }
    }
}

/// Visits the `k`-element subsets of `set`.
pub fn for_each_k_subset(set: VertexSet, k: usize, mut visit: impl FnMut(VertexSet)) {
    let elems: Vec<usize> = set.iter().collect();
    if k > elems.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(idx.iter().map(|&i| elems[i]).collect());
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + elems.len() - k) else {
            return;
        };
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().map(|x| x - 1))
    }

    #[test]
    fn antichain_reduction() {
        let c = SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[2]), vs(&[1, 2])]).unwrap();
        assert_eq!(c.facets(), &[vs(&[1, 2])]);
        let irr = SimplicialComplex::from_facets(2, [VertexSet::EMPTY]).unwrap();
        assert_eq!(irr, SimplicialComplex::irrelevant(2));
        assert_ne!(irr, SimplicialComplex::void(2));
        assert!(SimplicialComplex::from_facets(2, [vs(&[3])]).is_err());
        assert!(SimplicialComplex::from_facets(3, Vec::new()).unwrap().is_void());
    }

    #[test]
    fn independence_complex_of_edgeless_is_simplex() {
        let c = SimplicialComplex::independence_complex(&Graph::empty(5).unwrap());
        assert!(c.is_simplex());
        assert_eq!(c.facets(), &[VertexSet::full(5)]);
    }

    #[test]
    fn links_and_deletions() {
        let simplex = SimplicialComplex::simplex(4, VertexSet::full(4)).unwrap();
        assert_eq!(simplex.link(vs(&[1])).unwrap().facets(), &[vs(&[2, 3, 4])]);
        assert_eq!(simplex.deletion(vs(&[1])).facets(), &[vs(&[2, 3, 4])]);

        let boundary =
            SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]).unwrap();
        assert_eq!(boundary.link(vs(&[1])).unwrap().facets(), &[vs(&[2]), vs(&[3])]);
        assert!(boundary.link(vs(&[1, 2, 3])).is_err());
        // Deleting a non-vertex is the identity.
        assert_eq!(boundary.deletion(VertexSet::EMPTY), boundary);
    }

    #[test]
    fn link_of_empty_face_is_complex() {
        let b = SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[3])]).unwrap();
        assert_eq!(b.link(VertexSet::EMPTY).unwrap(), b);
        assert!(SimplicialComplex::void(3).link(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn stats_and_faces() {
        let c = SimplicialComplex::from_facets(3, [vs(&[1, 2, 3])]).unwrap();
        let s = c.stats();
        assert!(s.is_simplex);
        assert_eq!(s.dimension, Some(2));
        assert_eq!(s.f_vector, vec![1, 3, 3, 1]);
        assert_eq!(SimplicialComplex::void(3).stats().dimension, None);
        assert_eq!(SimplicialComplex::irrelevant(3).stats().dimension, Some(-1));
        assert_eq!(SimplicialComplex::irrelevant(3).stats().f_vector, vec![1]);

        let edge = SimplicialComplex::from_facets(2, [vs(&[1, 2])]).unwrap();
        assert_eq!(
            edge.all_faces(),
            vec![VertexSet::EMPTY, vs(&[1]), vs(&[2]), vs(&[1, 2])]
        );
        assert!(SimplicialComplex::void(2).all_faces().is_empty());
    }

    #[test]
    fn ind_c5_face_count() {
        let c5 = Graph::circulant(5, &[1]).unwrap();
        let ind = SimplicialComplex::independence_complex(&c5);
        assert_eq!(ind.all_faces().len(), 11);
        assert_eq!(ind.faces_of_size(2).len(), 5);
    }

    #[test]
    fn k_subsets() {
        let mut n = 0;
        for_each_k_subset(VertexSet::full(6), 3, |s| {
            assert_eq!(s.len(), 3);
            n += 1;
        });
        assert_eq!(n, 20);
        let mut empty = 0;
        for_each_k_subset(VertexSet::full(3), 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }
}
