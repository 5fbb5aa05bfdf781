//! Shelling orders: verification and exhaustive search.
//!
//! An order `F_1, ..., F_s` of the facets is a shelling when for all `i < j`
//! there are `x ∈ F_j ∖ F_i` and `k < j` with `F_j ∖ F_k = {x}`. Writing
//! `R(F_j)` for the set of such `x` over all `k < j` (the restriction of
//! `F_j`), the condition reads `(F_j ∖ F_i) ∩ R(F_j) ≠ ∅` for every `i < j`,
//! which depends only on the set of earlier facets. Non-pure orders are allowed.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::reduced_homology_dims;
use crate::vertex_set::VertexSet;

/// An ordering of all facets of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShellingCertificate(pub Vec<VertexSet>);

impl ShellingCertificate {
    /// Positions of the ordered facets in `delta.facets()`.
    pub fn facet_indices(&self, delta: &SimplicialComplex) -> Result<Vec<usize>> {
        self.0
            .iter()
            .map(|f| {
                delta
                    .facets()
                    .binary_search(f)
                    .map_err(|_| Error::NotAPermutation(format!("{f} is not a facet")))
            })
            .collect()
    }

    pub fn from_facet_indices(delta: &SimplicialComplex, indices: &[usize]) -> Result<Self> {
        indices
            .iter()
            .map(|&i| {
                delta.facets().get(i).copied().ok_or_else(|| {
                    Error::NotAPermutation(format!("facet index {i} out of range"))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(ShellingCertificate)
    }
}

/// The first place where an order stops being a shelling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingViolation {
    /// 0-based position of the offending facet in the order.
    pub position: usize,
    /// An earlier position `i` for which no admissible `x` exists.
    pub earlier: usize,
}

fn restriction(facet: VertexSet, earlier: &[VertexSet]) -> VertexSet {
    earlier
        .iter()
        .map(|e| facet.difference(*e))
        .filter(|d| d.len() == 1)
        .fold(VertexSet::EMPTY, |a, d| a.union(d))
}

fn check_permutation(delta: &SimplicialComplex, order: &ShellingCertificate) -> Result<()> {
    let mut sorted = order.0.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotAPermutation("repeated facet".into()));
    }
    if sorted != delta.facets() {
        return Err(Error::NotAPermutation(format!(
            "{} facets given, complex has {} and they differ",
            order.0.len(),
            delta.facets().len()
        )));
    }
    Ok(())
}

/// Checks an order; `Ok(None)` means it is a shelling.
pub fn shelling_violation(
    delta: &SimplicialComplex,
    order: &ShellingCertificate,
) -> Result<Option<ShellingViolation>> {
    check_permutation(delta, order)?;
    let facets = &order.0;
    for j in 1..facets.len() {
        let r = restriction(facets[j], &facets[..j]);
        if let Some(i) = (0..j).find(|&i| facets[j].difference(facets[i]).is_disjoint(r)) {
            return Ok(Some(ShellingViolation {
                position: j,
                earlier: i,
            }));
        }
    }
    Ok(None)
}

/// Every position at which an order fails, each with its first offending
/// earlier position.
pub fn shelling_violations(
    delta: &SimplicialComplex,
    order: &ShellingCertificate,
) -> Result<Vec<ShellingViolation>> {
    check_permutation(delta, order)?;
    let facets = &order.0;
    Ok((1..facets.len())
        .filter_map(|j| {
            let r = restriction(facets[j], &facets[..j]);
            (0..j)
                .find(|&i| facets[j].difference(facets[i]).is_disjoint(r))
                .map(|i| ShellingViolation {
                    position: j,
                    earlier: i,
                })
        })
        .collect())
}

pub fn verify_shelling(delta: &SimplicialComplex, order: &ShellingCertificate) -> Result<bool> {
    Ok(shelling_violation(delta, order)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOptions {
    /// At most 128.
    pub facet_cap: usize,
    /// Search nodes before giving up.
    pub node_budget: u64,
    /// Refute early when some pure skeleton has homology below its dimension.
    pub homology_precheck: bool,
    /// Prune with the h-triangle when the complex has at most this many faces.
    pub h_triangle_face_cap: usize,
}

impl Default for ShellingOptions {
    fn default() -> Self {
        ShellingOptions {
            facet_cap: 100,
            node_budget: 5_000_000,
            homology_precheck: true,
            h_triangle_face_cap: 1 << 20,
        }
    }
}

/// Why a complex has no shelling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonShellableProof {
    /// The backtracking search visited every candidate order.
    Exhausted { nodes: u64 },
    /// The pure `skeleton_dim`-skeleton has `H̃_degree ≠ 0` with
    /// `degree < skeleton_dim`; pure skeleta of shellable complexes are
    /// shellable and so have homology only in top degree.
    SkeletonHomology {
        skeleton_dim: i64,
        degree: i64,
        rank: usize,
        #[serde(rename = "char")]
        characteristic: u64,
    },
    /// Some h-triangle entry is negative, while a shelling would make it a count.
    NegativeHTriangle { size: usize, restriction: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Inconclusive {
    FacetCap { facets: usize, cap: usize },
    NodeBudget { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "snake_case")]
pub enum ShellingSearch {
    Found(ShellingCertificate),
    NotShellable(NonShellableProof),
    Inconclusive(Inconclusive),
}

impl ShellingSearch {
    pub fn certificate(&self) -> Option<&ShellingCertificate> {
        match self {
            ShellingSearch::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_not_shellable(&self) -> bool {
        matches!(self, ShellingSearch::NotShellable(_))
    }
}

/// Nonzero reduced homology below the top degree of some pure skeleton.
pub fn skeleton_obstruction(
    delta: &SimplicialComplex,
    field: FieldSpec,
) -> Result<Option<NonShellableProof>> {
    let Some(dim) = delta.dimension() else {
        return Ok(None);
    };
    for d in 0..=dim.max(0) {
        let skeleton = if delta.is_pure() && d == dim {
            delta.clone()
        } else {
            delta.pure_skeleton(d as usize)
        };
        if skeleton.is_void() {
            continue;
        }
        let h = reduced_homology_dims(&skeleton, field)?;
        if let Some((&degree, &rank)) = h.iter().find(|(&k, &r)| k < d && r > 0) {
            return Ok(Some(NonShellableProof::SkeletonHomology {
                skeleton_dim: d,
                degree,
                rank,
                characteristic: field.characteristic(),
            }));
        }
    }
    Ok(None)
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `h[size][r]`: in any shelling, the number of facets with `size` vertices
/// whose restriction has `r` vertices. `None` when a face count is over `face_cap`.
pub fn h_triangle(delta: &SimplicialComplex, face_cap: usize) -> Option<Vec<Vec<i64>>> {
    let total: u128 = delta.facets().iter().map(|f| 1u128 << f.len()).sum();
    if total > face_cap as u128 {
        return None;
    }
    let top = delta.facets().iter().map(|f| f.len()).max().unwrap_or(0);
    // f[size_of_max_facet][face_size]
    let mut f = vec![vec![0i64; top + 1]; top + 1];
    for face in delta.all_faces() {
        let degree = delta
            .facets()
            .iter()
            .filter(|t| face.is_subset(**t))
            .map(|t| t.len())
            .max()
            .expect("every face lies in a facet");
        f[degree][face.len()] += 1;
    }
    let mut h = vec![vec![0i64; top + 1]; top + 1];
    for i in 0..=top {
        for j in 0..=i {
            h[i][j] = (0..=j)
                .map(|k| {
                    let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                    sign * binomial((i - k) as i64, (j - k) as i64) * f[i][k]
                })
                .sum();
        }
    }
    Some(h)
}

/// Searches for a shelling.
///
/// Facets are placed in non-increasing size, which loses no shellings
/// (any shelling can be rearranged that way). Failed prefixes are memoized by
/// their facet set; whether a facet can follow a prefix depends only on that
/// set, so the memo is sound. Interchangeable candidates are therefore tried
/// once per set.
pub fn find_shelling(delta: &SimplicialComplex, opts: &ShellingOptions) -> Result<ShellingSearch> {
    let m = delta.facets().len();
    let cap = opts.facet_cap.min(128);
    if m > cap {
        return Ok(ShellingSearch::Inconclusive(Inconclusive::FacetCap {
            facets: m,
            cap,
        }));
    }
    if m <= 1 {
        return Ok(ShellingSearch::Found(ShellingCertificate(
            delta.facets().to_vec(),
        )));
    }
    if opts.homology_precheck {
        if let Some(proof) = skeleton_obstruction(delta, FieldSpec::F2)? {
            return Ok(ShellingSearch::NotShellable(proof));
        }
    }
    let h = h_triangle(delta, opts.h_triangle_face_cap);
    if let Some(h) = &h {
        for (size, row) in h.iter().enumerate() {
            if let Some(r) = row.iter().position(|&x| x < 0) {
                return Ok(ShellingSearch::NotShellable(
                    NonShellableProof::NegativeHTriangle {
                        size,
                        restriction: r,
                    },
                ));
            }
        }
    }

    let mut facets: Vec<VertexSet> = delta.facets().to_vec();
    facets.sort_by_key(|f| (std::cmp::Reverse(f.len()), f.bits()));
    let mut search = Search {
        facets: &facets,
        h,
        counts: vec![vec![0; facets[0].len() + 1]; facets[0].len() + 1],
        order: Vec::with_capacity(m),
        placed: 0,
        failed: HashSet::new(),
        nodes: 0,
        budget: opts.node_budget,
    };
    Ok(match search.run() {
        Some(true) => ShellingSearch::Found(ShellingCertificate(
            search.order.iter().map(|&i| facets[i]).collect(),
        )),
        Some(false) => ShellingSearch::NotShellable(NonShellableProof::Exhausted {
            nodes: search.nodes,
        }),
        None => ShellingSearch::Inconclusive(Inconclusive::NodeBudget {
            nodes: search.nodes,
        }),
    })
}

struct Search<'a> {
    /// Sorted by decreasing size.
    facets: &'a [VertexSet],
    h: Option<Vec<Vec<i64>>>,
    counts: Vec<Vec<i64>>,
    order: Vec<usize>,
    placed: u128,
    failed: HashSet<u128>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(true)` when a full shelling was found, `None` on budget exhaustion.
    fn run(&mut self) -> Option<bool> {
        if self.order.len() == self.facets.len() {
            return Some(true);
        }
        if self.failed.contains(&self.placed) {
            return Some(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let remaining: Vec<usize> = (0..self.facets.len())
            .filter(|&c| self.placed >> c & 1 == 0)
            .collect();
        let size = remaining.iter().map(|&c| self.facets[c].len()).max().unwrap();
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        for &c in remaining.iter().filter(|&&c| self.facets[c].len() == size) {
            if let Some(r) = self.admissible(c) {
                candidates.push((r, c));
            }
        }
        // Facets that attach along little of their boundary go first.
        candidates.sort();
        for (r, c) in candidates {
            if let Some(h) = &self.h {
                if self.counts[size][r] + 1 > h[size][r] {
                    continue;
                }
            }
            self.counts[size][r] += 1;
            self.order.push(c);
            self.placed |= 1u128 << c;
            let res = self.run();
            if res != Some(false) {
                return res;
            }
            self.placed &= !(1u128 << c);
            self.order.pop();
            self.counts[size][r] -= 1;
        }
        self.failed.insert(self.placed);
        Some(false)
    }

    /// Restriction size of facet `c` after the current prefix, if `c` may come next.
    fn admissible(&self, c: usize) -> Option<usize> {
        let facet = self.facets[c];
        if self.order.is_empty() {
            return Some(0);
        }
        let mut r = VertexSet::EMPTY;
        for &k in &self.order {
            let d = facet.difference(self.facets[k]);
            if d.len() == 1 {
                r = r.union(d);
            }
        }
        self.order
            .iter()
            .all(|&i| !facet.difference(self.facets[i]).is_disjoint(r))
            .then_some(r.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().map(|x| x - 1))
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| vs(f))).unwrap()
    }

    fn no_precheck() -> ShellingOptions {
        ShellingOptions {
            homology_precheck: false,
            ..ShellingOptions::default()
        }
    }

    #[test]
    fn two_disjoint_edges() {
        let c = complex(4, &[&[1, 2], &[3, 4]]);
        for order in [[vs(&[1, 2]), vs(&[3, 4])], [vs(&[3, 4]), vs(&[1, 2])]] {
            assert!(!verify_shelling(&c, &ShellingCertificate(order.to_vec())).unwrap());
        }
        assert_eq!(
            find_shelling(&c, &no_precheck()).unwrap(),
            ShellingSearch::NotShellable(NonShellableProof::NegativeHTriangle {
                size: 2,
                restriction: 2
            })
        );
        let bare = ShellingOptions {
            h_triangle_face_cap: 0,
            ..no_precheck()
        };
        assert_eq!(
            find_shelling(&c, &bare).unwrap(),
            ShellingSearch::NotShellable(NonShellableProof::Exhausted { nodes: 3 })
        );
        assert!(matches!(
            find_shelling(&c, &ShellingOptions::default()).unwrap(),
            ShellingSearch::NotShellable(NonShellableProof::SkeletonHomology { degree: 0, .. })
        ));
    }

    #[test]
    fn simplex_is_trivially_shellable() {
        let c = complex(3, &[&[1, 2, 3]]);
        let s = find_shelling(&c, &ShellingOptions::default()).unwrap();
        assert_eq!(s, ShellingSearch::Found(ShellingCertificate(vec![vs(&[1, 2, 3])])));
    }

    #[test]
    fn non_pure_example() {
        // A triangle with a pendant edge is shellable: triangle first.
        let c = complex(4, &[&[1, 2, 3], &[3, 4]]);
        let good = ShellingCertificate(vec![vs(&[1, 2, 3]), vs(&[3, 4])]);
        let bad = ShellingCertificate(vec![vs(&[3, 4]), vs(&[1, 2, 3])]);
        assert!(verify_shelling(&c, &good).unwrap());
        assert!(!verify_shelling(&c, &bad).unwrap());
        assert_eq!(
            find_shelling(&c, &no_precheck()).unwrap().certificate(),
            Some(&good)
        );
    }

    #[test]
    fn rejects_non_permutations() {
        let c = complex(4, &[&[1, 2], &[2, 3]]);
        let short = ShellingCertificate(vec![vs(&[1, 2])]);
        assert!(matches!(verify_shelling(&c, &short), Err(Error::NotAPermutation(_))));
        let repeated = ShellingCertificate(vec![vs(&[1, 2]), vs(&[1, 2])]);
        assert!(verify_shelling(&c, &repeated).is_err());
    }

    #[test]
    fn h_triangle_of_pure_path() {
        // Path 1-2-3 as a 1-complex: h = (1, 1, 0).
        let c = complex(3, &[&[1, 2], &[2, 3]]);
        let h = h_triangle(&c, 1 << 10).unwrap();
        assert_eq!(h[2], vec![1, 1, 0]);
    }

    #[test]
    fn facet_cap() {
        let c16 = SimplicialComplex::independence_complex(&Graph::circulant(16, &[1, 4, 8]).unwrap());
        let opts = ShellingOptions {
            facet_cap: 10,
            ..ShellingOptions::default()
        };
        assert_eq!(
            find_shelling(&c16, &opts).unwrap(),
            ShellingSearch::Inconclusive(Inconclusive::FacetCap { facets: 80, cap: 10 })
        );
    }

    #[test]
    fn search_results_verify() {
        let c5 = SimplicialComplex::independence_complex(&Graph::circulant(5, &[1]).unwrap());
        // Ind(C_5) is a 5-cycle, which is shellable.
        let s = find_shelling(&c5, &no_precheck()).unwrap();
        assert!(verify_shelling(&c5, s.certificate().unwrap()).unwrap());
    }
}
