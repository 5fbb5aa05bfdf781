//! Reduced simplicial homology over prime fields.

use std::collections::BTreeMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, SignedMatrix};
use crate::vertex_set::VertexSet;
use crate::with_field;

/// `dim H̃_d` keyed by `d`, for `-1 <= d <= dim Δ`.
pub type HomologyDims = BTreeMap<i64, usize>;

/// Reduced homology from faces bucketed by size: `faces[k]` holds the faces
/// with `k` vertices, sorted by bitmask, and `faces[0] == [∅]`.
///
/// Returns `dims[k] = dim H̃_{k-1}`.
pub fn reduced_homology_of_faces<F: Field>(faces: &[Vec<VertexSet>]) -> Vec<usize> {
    // ranks[k] = rank of the boundary map from k-vertex faces to (k-1)-vertex faces.
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        ranks[k] = boundary_matrix(&faces[k], &faces[k - 1]).rank::<F>();
    }
    (0..faces.len())
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Boundary of the `k`-vertex faces `upper` into the `(k-1)`-vertex faces `lower`.
pub fn boundary_matrix(upper: &[VertexSet], lower: &[VertexSet]) -> SignedMatrix {
    let mut m = SignedMatrix::new(lower.len());
    m.rows = upper
        .iter()
        .map(|&face| {
            face.iter()
                .enumerate()
                .map(|(pos, v)| {
                    let col = lower
                        .binary_search(&face.without(v))
                        .expect("boundary face missing from the complex");
                    (col, if pos % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect();
    m
}

/// Buckets faces by size. The input must be closed under taking subsets.
pub fn bucket_faces(faces: impl IntoIterator<Item = VertexSet>) -> Vec<Vec<VertexSet>> {
    let mut buckets: Vec<Vec<VertexSet>> = Vec::new();
    for f in faces {
        let k = f.len();
        if buckets.len() <= k {
            buckets.resize(k + 1, Vec::new());
        }
        buckets[k].push(f);
    }
    for b in &mut buckets {
        b.sort();
    }
    buckets
}

/// Reduced homology of Δ over `F`.
pub fn reduced_homology<F: Field>(delta: &SimplicialComplex) -> Result<HomologyDims> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces = bucket_faces(delta.all_faces());
    Ok(reduced_homology_of_faces::<F>(&faces)
        .into_iter()
        .enumerate()
        .map(|(k, d)| (k as i64 - 1, d))
        .collect())
}

/// Reduced homology of Δ over the field named by `field`.
pub fn reduced_homology_dims(delta: &SimplicialComplex, field: FieldSpec) -> Result<HomologyDims> {
    with_field!(field, F => reduced_homology::<F>(delta))
}

/// A face whose link has homology below the link's dimension.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ReisnerWitness {
    /// 1-based labels of the face.
    pub face: Vec<usize>,
    pub link_dimension: i64,
    pub degree: i64,
    pub rank: usize,
}

/// Cap on the ground set for Reisner's criterion.
pub const REISNER_GROUND_CAP: usize = 24;

/// Reisner's criterion. Returns `None` when Δ is Cohen-Macaulay over the
/// field, or the first failing face (faces visited in bitmask order).
pub fn reisner_obstruction(
    delta: &SimplicialComplex,
    field: FieldSpec,
) -> Result<Option<ReisnerWitness>> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    if delta.ground_size() > REISNER_GROUND_CAP {
        return Err(Error::SizeCap {
            what: "ground set",
            size: delta.ground_size(),
            cap: REISNER_GROUND_CAP,
        });
    }
    for face in delta.all_faces() {
        let link = delta.link(face)?;
        let dim = link.dimension().expect("links of faces are nonvoid");
        let h = reduced_homology_dims(&link, field)?;
        if let Some((&degree, &rank)) = h.iter().find(|(&d, &r)| d < dim && r > 0) {
            return Ok(Some(ReisnerWitness {
                face: face.to_labels(),
                link_dimension: dim,
                degree,
                rank,
            }));
        }
    }
    Ok(None)
}

pub fn is_cohen_macaulay(delta: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(reisner_obstruction(delta, field)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::F2;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().map(|x| x - 1))
    }

    fn dims(pairs: &[(i64, usize)]) -> HomologyDims {
        pairs.iter().copied().collect()
    }

    #[test]
    fn conventions() {
        let irr = SimplicialComplex::irrelevant(3);
        assert_eq!(reduced_homology::<F2>(&irr).unwrap(), dims(&[(-1, 1)]));
        assert_eq!(
            reduced_homology::<F2>(&SimplicialComplex::void(3)),
            Err(Error::VoidComplex)
        );
        let simplex = SimplicialComplex::simplex(4, VertexSet::full(4)).unwrap();
        assert!(reduced_homology::<F2>(&simplex).unwrap().values().all(|&d| d == 0));
    }

    #[test]
    fn circle_and_points() {
        let circle =
            SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]).unwrap();
        assert_eq!(
            reduced_homology_dims(&circle, FieldSpec::F32003).unwrap(),
            dims(&[(-1, 0), (0, 0), (1, 1)])
        );
        let points = SimplicialComplex::from_facets(2, [vs(&[1]), vs(&[2])]).unwrap();
        assert_eq!(
            reduced_homology_dims(&points, FieldSpec::F2).unwrap(),
            dims(&[(-1, 0), (0, 1)])
        );
    }

    #[test]
    fn projective_plane_sees_characteristic() {
        // Six-vertex triangulation of RP^2.
        let facets = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
        ];
        let rp2 = SimplicialComplex::from_facets(6, facets.iter().map(|f| vs(f))).unwrap();
        let h2 = reduced_homology_dims(&rp2, FieldSpec::F2).unwrap();
        let h3 = reduced_homology_dims(&rp2, FieldSpec::new(3).unwrap()).unwrap();
        assert_eq!(h2[&1], 1);
        assert_eq!(h2[&2], 1);
        assert_eq!(h3[&1], 0);
        assert_eq!(h3[&2], 0);
    }

    #[test]
    fn reisner() {
        let simplex = SimplicialComplex::simplex(3, VertexSet::full(3)).unwrap();
        assert!(is_cohen_macaulay(&simplex, FieldSpec::F2).unwrap());
        let two_edges = SimplicialComplex::from_facets(4, [vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        let w = reisner_obstruction(&two_edges, FieldSpec::F2).unwrap().unwrap();
        assert_eq!(w.face, Vec::<usize>::new());
        assert_eq!((w.degree, w.rank), (0, 1));
        let circle =
            SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]).unwrap();
        assert!(is_cohen_macaulay(&circle, FieldSpec::F32003).unwrap());
    }
}
