//! Square-free monomial ideals.
//!
//! A generator is identified with its support. Generators always form an
//! antichain under inclusion, i.e. a minimal generating set.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{for_each_k_subset, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{minimalize, VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqFreeIdeal {
    ring_n: usize,
    gens: Vec<VertexSet>,
}

/// Monomial primes `⟨x_i : i ∈ S⟩`, one variable set each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeList(pub Vec<VertexSet>);

impl SqFreeIdeal {
    pub fn new<I>(ring_n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if ring_n > MAX_VERTICES {
            return Err(Error::TooManyVertices(ring_n));
        }
        let ring = VertexSet::full(ring_n);
        let gens: Vec<VertexSet> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| !g.is_subset(ring)) {
            let label = bad.difference(ring).first().unwrap() + 1;
            return Err(Error::VertexOutOfRange { label, n: ring_n });
        }
        Ok(Self::from_supports(ring_n, gens))
    }

    fn from_supports(ring_n: usize, gens: Vec<VertexSet>) -> Self {
        let mut gens = minimalize(gens);
        gens.sort_by_key(|g| (g.len(), g.bits()));
        SqFreeIdeal { ring_n, gens }
    }

    pub fn zero(ring_n: usize) -> Self {
        SqFreeIdeal {
            ring_n,
            gens: Vec::new(),
        }
    }

    /// `I(G) = ⟨x_i x_j : {x_i, x_j} ∈ E(G)⟩`.
    pub fn edge_ideal(g: &Graph) -> Self {
        Self::from_supports(
            g.ground_size(),
            g.edges().into_iter().map(|e| e.as_set()).collect(),
        )
    }

    /// The Stanley-Reisner ideal `I_Δ`, generated by the minimal non-faces of Δ.
    pub fn stanley_reisner(delta: &SimplicialComplex) -> Self {
        let n = delta.ground_size();
        // Minimal non-faces are the minimal transversals of the facet complements.
        let complements: Vec<VertexSet> = delta
            .facets()
            .iter()
            .map(|f| VertexSet::full(n).difference(*f))
            .collect();
        Self::from_supports(n, minimal_transversals(&complements))
    }

    pub fn ring_size(&self) -> usize {
        self.ring_n
    }

    /// Generators sorted by degree, then bitmask.
    pub fn gens(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&VertexSet::EMPTY)
    }

    /// Sorted, deduplicated generator degrees.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.gens.iter().map(|g| g.len()).collect();
        d.dedup();
        d
    }

    pub fn contains_monomial(&self, support: VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(support))
    }

    /// The complex Δ with `I_Δ = I`: faces are the sets containing no generator.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        // Facets are complements of minimal transversals of the generators.
        let full = VertexSet::full(self.ring_n);
        let facets = minimal_transversals(&self.gens)
            .into_iter()
            .map(|t| full.difference(t))
            .collect();
        Ok(SimplicialComplex::from_antichain_unchecked(self.ring_n, facets))
    }

    /// `I^∨ = ⋂ ⟨x_i : i ∈ supp(u)⟩`, generated by the minimal transversals of the supports.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(Self::from_supports(self.ring_n, minimal_transversals(&self.gens)))
    }

    /// The minimal monomial primes over `I`. For an edge ideal these are the
    /// minimal vertex covers.
    pub fn minimal_primes(&self) -> Result<PrimeList> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(PrimeList(minimal_transversals(&self.gens)))
    }

    pub fn height(&self) -> Result<usize> {
        Ok(self
            .minimal_primes()?
            .0
            .iter()
            .map(|p| p.len())
            .min()
            .unwrap_or(0))
    }

    /// `I_[d]`: the ideal generated by the square-free degree-`d` monomials of `I`.
    pub fn squarefree_component(&self, d: usize) -> Self {
        let mut gens = Vec::new();
        if d <= self.ring_n {
            for_each_k_subset(VertexSet::full(self.ring_n), d, |m| {
                if self.contains_monomial(m) {
                    gens.push(m);
                }
            });
        }
        Self::from_supports(self.ring_n, gens)
    }
}

impl fmt::Display for SqFreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if g.is_empty() {
                write!(f, "1")?;
            }
            for v in g.iter() {
                write!(f, "x{}", v + 1)?;
            }
        }
        write!(f, ")")
    }
}

/// All minimal transversals (hitting sets) of `edges`, sorted by bitmask.
///
/// Recursive branching in the style of MMCS: pick the uncovered edge with the
/// fewest candidate vertices, branch on each, and cut any branch in which some
/// chosen vertex loses its last private edge. The top-level branches run in
/// parallel. An empty edge has no transversal; no edges gives `{∅}`.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    if edges.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    let edges = minimalize(edges.to_vec());
    let universe = edges.iter().fold(VertexSet::EMPTY, |a, e| a.union(*e));
    let Some(first) = pick_edge(&edges, VertexSet::EMPTY, universe) else {
        return vec![VertexSet::EMPTY];
    };
    let branch = edges[first];
    let branches: Vec<(usize, VertexSet)> = branch
        .iter()
        .scan(universe.difference(branch), |cand, v| {
            let here = *cand;
            *cand = cand.with(v);
            Some((v, here))
        })
        .collect();
    let mut out: Vec<VertexSet> = branches
        .into_par_iter()
        .flat_map_iter(|(v, cand)| {
            let mut found = Vec::new();
            mmcs(&edges, VertexSet::singleton(v), cand, &mut found);
            found
        })
        .collect();
    out.sort();
    out
}

fn pick_edge(edges: &[VertexSet], chosen: VertexSet, cand: VertexSet) -> Option<usize> {
    edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_disjoint(chosen))
        .min_by_key(|(_, e)| e.intersection(cand).len())
        .map(|(i, _)| i)
}

/// Each chosen vertex must have an edge that it alone covers.
fn is_minimal_so_far(edges: &[VertexSet], chosen: VertexSet) -> bool {
    let mut private = VertexSet::EMPTY;
    for e in edges {
        let hit = e.intersection(chosen);
        if hit.len() == 1 {
            private = private.union(hit);
        }
    }
    private == chosen
}

fn mmcs(edges: &[VertexSet], chosen: VertexSet, mut cand: VertexSet, out: &mut Vec<VertexSet>) {
    if !is_minimal_so_far(edges, chosen) {
        return;
    }
    let Some(idx) = pick_edge(edges, chosen, cand) else {
        out.push(chosen);
        return;
    };
    let branch = edges[idx].intersection(cand);
    cand = cand.difference(branch);
    for v in branch {
        mmcs(edges, chosen.with(v), cand, out);
        cand = cand.with(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().map(|x| x - 1))
    }

    #[test]
    fn single_generator() {
        let i = SqFreeIdeal::new(2, [vs(&[1, 2])]).unwrap();
        let dual = i.alexander_dual().unwrap();
        assert_eq!(dual.gens(), &[vs(&[1]), vs(&[2])]);
        assert_eq!(i.minimal_primes().unwrap().0, vec![vs(&[1]), vs(&[2])]);
        assert_eq!(i.height().unwrap(), 1);
        assert_eq!(dual.alexander_dual().unwrap(), i);
    }

    #[test]
    fn zero_and_unit_conventions() {
        let z = SqFreeIdeal::zero(3);
        assert_eq!(z.alexander_dual(), Err(Error::ZeroIdeal));
        assert_eq!(z.height(), Err(Error::ZeroIdeal));
        assert_eq!(z.complex().unwrap().facets(), &[VertexSet::full(3)]);
        let unit = SqFreeIdeal::new(3, [VertexSet::EMPTY, vs(&[1])]).unwrap();
        assert!(unit.is_unit());
        assert_eq!(unit.gens().len(), 1);
        assert_eq!(unit.complex(), Err(Error::UnitIdeal));
    }

    #[test]
    fn stanley_reisner_small() {
        let triangle_boundary =
            SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]).unwrap();
        assert_eq!(
            SqFreeIdeal::stanley_reisner(&triangle_boundary).gens(),
            &[vs(&[1, 2, 3])]
        );
        let simplex = SimplicialComplex::simplex(3, VertexSet::full(3)).unwrap();
        assert!(SqFreeIdeal::stanley_reisner(&simplex).is_zero());
        // A vertex outside every face is a degree-one generator.
        let partial = SimplicialComplex::simplex(3, vs(&[1, 2])).unwrap();
        assert_eq!(SqFreeIdeal::stanley_reisner(&partial).gens(), &[vs(&[3])]);
        let two_points = SqFreeIdeal::new(2, [vs(&[1, 2])]).unwrap().complex().unwrap();
        assert_eq!(two_points.facets(), &[vs(&[1]), vs(&[2])]);
    }

    #[test]
    fn complex_of_c5_edge_ideal_is_ind() {
        let c5 = Graph::circulant(5, &[1]).unwrap();
        let ind = SqFreeIdeal::edge_ideal(&c5).complex().unwrap();
        assert_eq!(ind, SimplicialComplex::independence_complex(&c5));
    }

    #[test]
    fn squarefree_components() {
        let i = SqFreeIdeal::new(3, [vs(&[1, 2])]).unwrap();
        assert_eq!(i.squarefree_component(3).gens(), &[vs(&[1, 2, 3])]);
        assert_eq!(i.squarefree_component(2), i);
        assert!(i.squarefree_component(1).is_zero());
        assert!(i.squarefree_component(4).is_zero());
    }

    #[test]
    fn transversal_edge_cases() {
        assert_eq!(minimal_transversals(&[]), vec![VertexSet::EMPTY]);
        assert!(minimal_transversals(&[VertexSet::EMPTY]).is_empty());
        let t = minimal_transversals(&[vs(&[1, 2]), vs(&[2, 3])]);
        assert_eq!(t, vec![vs(&[2]), vs(&[1, 3])]);
    }

    #[test]
    fn display() {
        let i = SqFreeIdeal::new(3, [vs(&[2, 3]), vs(&[1])]).unwrap();
        assert_eq!(i.to_string(), "(x1, x2x3)");
    }
}
