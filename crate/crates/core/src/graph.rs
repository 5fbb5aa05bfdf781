//! Finite simple graphs on at most 64 vertices.
//!
//! Vertices are 0-based internally and printed as `x_1..x_n`. A graph keeps
//! its ground set `0..n` when vertices are deleted, so induced subgraphs and
//! the complexes built from them stay comparable index-for-index.

use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    vertices: VertexSet,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// An unordered vertex pair `{a, b}` with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        Edge(a.min(b), a.max(b))
    }

    pub fn as_set(self) -> VertexSet {
        VertexSet::singleton(self.0).with(self.1)
    }
}

/// Two edges to be tested for 3-disjointness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgePair(pub Edge, pub Edge);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub independence_number: usize,
    pub min_vertex_cover_size: usize,
    pub is_well_covered: bool,
    pub has_degree_one_vertex: bool,
    /// 1-based labels.
    pub isolated_vertices: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            vertices: VertexSet::full(n),
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        })
    }

    /// Builds a graph from 0-based edges. Loops and repeated pairs are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { label: v + 1, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a + 1));
            }
            if g.has_edge(a, b) {
                let e = Edge::new(a, b);
                return Err(Error::DuplicateEdge(e.0 + 1, e.1 + 1));
            }
            g.adj[a] = g.adj[a].with(b);
            g.adj[b] = g.adj[b].with(a);
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] with 1-based endpoints.
    pub fn from_labeled_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut shifted = Vec::new();
        for (a, b) in edges {
            if a == 0 || b == 0 {
                return Err(Error::VertexOutOfRange { label: 0, n });
            }
            shifted.push((a - 1, b - 1));
        }
        Graph::from_edges(n, shifted)
    }

    /// The circulant graph `C_n(S)`: `x_i ~ x_j` iff the cyclic distance of
    /// `i` and `j` lies in `S`.
    pub fn circulant(n: usize, distances: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig("circulant graph needs n >= 1".into()));
        }
        for &d in distances {
            if d == 0 || d > n / 2 {
                return Err(Error::BadCirculantDistance { n, d });
            }
        }
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                let diff = j - i;
                if distances.contains(&diff.min(n - diff)) {
                    g.adj[i] = g.adj[i].with(j);
                    g.adj[j] = g.adj[j].with(i);
                }
            }
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Parse(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Size of the ground set `0..n`.
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// The vertices still present.
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// Edges with `a < b`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .iter()
            .flat_map(|a| {
                self.adj[a]
                    .iter()
                    .filter(move |&b| b > a)
                    .map(move |b| Edge(a, b))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Union of closed neighborhoods of the members of `s`.
    pub fn closed_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// The subgraph induced on `self.vertices() ∩ keep`; the ground set is unchanged.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let vertices = self.vertices.intersection(keep);
        let adj = (0..self.n)
            .map(|v| {
                if vertices.contains(v) {
                    self.adj[v].intersection(vertices)
                } else {
                    VertexSet::EMPTY
                }
            })
            .collect();
        Graph {
            n: self.n,
            vertices,
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Relabels the present vertices as `0..k`. Returns the new graph and, for
    /// each new index, the original one.
    pub fn compact(&self) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = self.vertices.iter().collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| self.adj[v].iter().map(|u| new_index[u]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| old.iter().map(|&v| l[v].clone()).collect());
        let g = Graph {
            n: old.len(),
            vertices: VertexSet::full(old.len()),
            adj,
            labels,
        };
        (g, old)
    }

    /// `G ∖ v`.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices.without(v))
    }

    /// `G ∖ N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Graph {
        self.induced(self.vertices.difference(self.closed_neighborhood(v)))
    }

    /// True when the induced subgraph on the four endpoints is disconnected.
    pub fn is_three_disjoint(&self, pair: EdgePair) -> Result<bool> {
        let EdgePair(e1, e2) = pair;
        for e in [e1, e2] {
            if !self.has_edge(e.0, e.1) {
                return Err(Error::NotAnEdge(e.0 + 1, e.1 + 1));
            }
        }
        if !e1.as_set().is_disjoint(e2.as_set()) {
            return Err(Error::SharedEndpoint);
        }
        // Both pairs are edges, so the four vertices are disconnected exactly
        // when nothing joins the two pairs.
        let reach = self.adj[e1.0].union(self.adj[e1.1]);
        Ok(reach.is_disjoint(e2.as_set()))
    }

    /// Induced matching number: the largest number of pairwise 3-disjoint edges.
    pub fn induced_matching_number(&self) -> usize {
        let mut memo = HashMap::new();
        self.induced_matching_within(self.vertices, &mut memo)
    }

    fn induced_matching_within(
        &self,
        allowed: VertexSet,
        memo: &mut HashMap<VertexSet, usize>,
    ) -> usize {
        // Vertices without an edge inside `allowed` cannot be matched.
        let live: VertexSet = allowed
            .iter()
            .filter(|&v| !self.adj[v].is_disjoint(allowed))
            .collect();
        if live.is_empty() {
            return 0;
        }
        if let Some(&m) = memo.get(&live) {
            return m;
        }
        let v = live
            .iter()
            .min_by_key(|&v| self.adj[v].intersection(live).len())
            .expect("live is nonempty");
        // Either v is unmatched, or it is matched to one of its live neighbours.
        let mut best = self.induced_matching_within(live.without(v), memo);
        for u in self.adj[v].intersection(live) {
            let blocked = self.closed_neighborhood(u).union(self.closed_neighborhood(v));
            best = best.max(1 + self.induced_matching_within(live.difference(blocked), memo));
        }
        memo.insert(live, best);
        best
    }

    /// Calls `visit` on every maximal independent set of the subgraph induced
    /// on `within`, stopping early on `ControlFlow::Break`.
    pub fn try_for_each_maximal_independent_set<B>(
        &self,
        within: VertexSet,
        mut visit: impl FnMut(VertexSet) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let within = within.intersection(self.vertices);
        self.bron_kerbosch(VertexSet::EMPTY, within, VertexSet::EMPTY, within, &mut visit)
    }

    // Pivoting Bron-Kerbosch on the complement graph.
    fn bron_kerbosch<B>(
        &self,
        chosen: VertexSet,
        mut cand: VertexSet,
        mut excluded: VertexSet,
        within: VertexSet,
        visit: &mut impl FnMut(VertexSet) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if cand.is_empty() {
            if excluded.is_empty() {
                return visit(chosen);
            }
            return ControlFlow::Continue(());
        }
        let non_adj = |v: usize| within.difference(self.adj[v]).without(v);
        let pivot = cand
            .union(excluded)
            .iter()
            .max_by_key(|&u| non_adj(u).intersection(cand).len())
            .expect("cand is nonempty");
        for v in cand.difference(non_adj(pivot)) {
            let nv = non_adj(v);
            self.bron_kerbosch(
                chosen.with(v),
                cand.intersection(nv),
                excluded.intersection(nv),
                within,
                visit,
            )?;
            cand = cand.without(v);
            excluded = excluded.with(v);
        }
        ControlFlow::Continue(())
    }

    /// All inclusion-maximal independent sets, sorted by bitmask.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        self.maximal_independent_sets_within(self.vertices)
    }

    pub fn maximal_independent_sets_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let _ = self.try_for_each_maximal_independent_set::<()>(within, |s| {
            out.push(s);
            ControlFlow::Continue(())
        });
        out.sort();
        out
    }

    pub fn independence_number(&self) -> usize {
        self.maximal_independent_sets()
            .iter()
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    pub fn stats(&self) -> GraphStats {
        let sizes: Vec<usize> = self
            .maximal_independent_sets()
            .iter()
            .map(|s| s.len())
            .collect();
        let independence_number = sizes.iter().copied().max().unwrap_or(0);
        GraphStats {
            independence_number,
            min_vertex_cover_size: self.vertex_count() - independence_number,
            is_well_covered: sizes.iter().all(|&s| s == independence_number),
            has_degree_one_vertex: self.vertices.iter().any(|v| self.degree(v) == 1),
            isolated_vertices: self
                .vertices
                .iter()
                .filter(|&v| self.degree(v) == 0)
                .map(|v| v + 1)
                .collect(),
        }
    }

    /// True when the graph contains no cycle.
    pub fn is_forest(&self) -> bool {
        let mut seen = VertexSet::EMPTY;
        let mut components = 0;
        for v in self.vertices {
            if seen.contains(v) {
                continue;
            }
            components += 1;
            let mut frontier = VertexSet::singleton(v);
            seen = seen.with(v);
            while let Some(u) = frontier.first() {
                frontier = frontier.without(u);
                let fresh = self.adj[u].difference(seen);
                seen = seen.union(fresh);
                frontier = frontier.union(fresh);
            }
        }
        self.edge_count() + components == self.vertex_count()
    }

    /// Chordality via maximum cardinality search and a perfect elimination check.
    pub fn is_chordal(&self) -> bool {
        let mut weight = vec![0usize; self.n];
        let mut numbered = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(self.vertex_count());
        while numbered != self.vertices {
            let v = self
                .vertices
                .difference(numbered)
                .iter()
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unnumbered vertex exists");
            for u in self.adj[v].difference(numbered) {
                weight[u] += 1;
            }
            numbered = numbered.with(v);
            order.push(v);
        }
        // The reverse of an MCS order is a perfect elimination order iff chordal:
        // for each v, its earlier neighbours must form a clique.
        let mut earlier = VertexSet::EMPTY;
        for &v in &order {
            let back = self.adj[v].intersection(earlier);
            if back.iter().any(|u| !back.without(u).is_subset(self.adj[u])) {
                return false;
            }
            earlier = earlier.with(v);
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn small_graph() -> Graph {
        Graph::from_labeled_edges(
            8,
            [
                (1, 5), (1, 6), (1, 7), (1, 8), (2, 5), (2, 6), (2, 7),
                (2, 8), (3, 6), (3, 7), (4, 6), (4, 8), (7, 8),
            ],
        )
        .unwrap()
    }

    #[test]
    fn circulant_c16() {
        let g = Graph::circulant(16, &[1, 4, 8]).unwrap();
        assert_eq!(g.edge_count(), 40);
        assert!(g.vertices().iter().all(|v| g.degree(v) == 5));
    }

    #[test]
    fn circulant_small_cases() {
        let c5 = Graph::circulant(5, &[1]).unwrap();
        assert_eq!(c5, Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap());
        let k4 = Graph::circulant(4, &[1, 2]).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(Graph::circulant(4, &[0]).is_err());
        assert!(Graph::circulant(4, &[3]).is_err());
    }

    #[test]
    fn closed_neighborhoods() {
        let p = path(3);
        assert_eq!(p.closed_neighborhood(1), VertexSet::from_indices([0, 1, 2]));
        let g = Graph::empty(3).unwrap();
        assert_eq!(g.closed_neighborhood(2), VertexSet::singleton(2));
        assert_eq!(small_graph().closed_neighborhood(2), VertexSet::from_indices([2, 5, 6]));
    }

    #[test]
    fn three_disjoint() {
        let p5 = path(5);
        assert!(p5
            .is_three_disjoint(EdgePair(Edge(0, 1), Edge(3, 4)))
            .unwrap());
        assert_eq!(
            p5.is_three_disjoint(EdgePair(Edge(0, 1), Edge(1, 2))),
            Err(Error::SharedEndpoint)
        );
        assert!(p5.is_three_disjoint(EdgePair(Edge(0, 1), Edge(0, 3))).is_err());
        let c4 = Graph::circulant(4, &[1]).unwrap();
        assert!(!c4.is_three_disjoint(EdgePair(Edge(0, 1), Edge(2, 3))).unwrap());

        let g = small_graph();
        let edges = g.edges();
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if a.as_set().is_disjoint(b.as_set()) {
                    assert!(!g.is_three_disjoint(EdgePair(a, b)).unwrap());
                }
            }
        }
    }

    #[test]
    fn induced_matching_numbers() {
        assert_eq!(small_graph().induced_matching_number(), 1);
        assert_eq!(Graph::empty(4).unwrap().induced_matching_number(), 0);
        assert_eq!(path(5).induced_matching_number(), 2);
    }

    #[test]
    fn maximal_independent_sets_small() {
        let k3 = Graph::circulant(3, &[1]).unwrap();
        assert_eq!(
            k3.maximal_independent_sets(),
            vec![VertexSet::singleton(0), VertexSet::singleton(1), VertexSet::singleton(2)]
        );
        let c16 = Graph::circulant(16, &[1, 4, 8]).unwrap();
        let mis = c16.maximal_independent_sets();
        assert_eq!(mis.len(), 80);
        assert!(mis.iter().all(|s| s.len() == 4));
        // The empty graph has a single, empty, maximal independent set.
        assert_eq!(Graph::empty(0).unwrap().maximal_independent_sets(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn stats() {
        let s = small_graph().stats();
        assert!(!s.has_degree_one_vertex);
        assert_eq!(s.min_vertex_cover_size, 4);
        let e = Graph::from_edges(2, [(0, 1)]).unwrap().stats();
        assert_eq!(e.independence_number, 1);
        assert!(e.has_degree_one_vertex);
        let c = Graph::circulant(16, &[1, 4, 8]).unwrap().stats();
        assert!(c.is_well_covered);
        assert_eq!(c.independence_number, 4);
        assert_eq!(Graph::empty(3).unwrap().stats().isolated_vertices, vec![1, 2, 3]);
    }

    #[test]
    fn induced_keeps_ground_set() {
        let g = small_graph().delete_vertex(0);
        assert_eq!(g.ground_size(), 8);
        assert_eq!(g.vertex_count(), 7);
        assert!(!g.neighbors(4).contains(0));
        assert!(g.maximal_independent_sets().iter().all(|s| !s.contains(0)));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::Loop(2)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(1, 2)));
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn forests_and_chordality() {
        assert!(path(6).is_forest());
        assert!(path(6).is_chordal());
        let c4 = Graph::circulant(4, &[1]).unwrap();
        assert!(!c4.is_forest());
        assert!(!c4.is_chordal());
        assert!(Graph::circulant(4, &[1, 2]).unwrap().is_chordal());
        assert!(!Graph::circulant(5, &[1]).unwrap().is_chordal());
    }
}
