//! Vertex decomposability of graphs and of simplicial complexes.
//!
//! A graph is vertex decomposable when it has no edges, or some vertex `v`
//! is a shedding vertex (no independent set of `G ∖ N[v]` is maximal in
//! `G ∖ v`) with `G ∖ v` and `G ∖ N[v]` both vertex decomposable. Every graph
//! reached this way is an induced subgraph, so the search is memoized on
//! vertex sets.

use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VdVerdict {
    Decomposable,
    NotDecomposable,
    /// The state budget ran out before a verdict.
    Inconclusive,
}

/// A maximal independent set of `G ∖ v` lying inside `G ∖ N[v]`, or `None`
/// when `v` is a shedding vertex.
pub fn shedding_obstruction(g: &Graph, v: usize) -> Option<VertexSet> {
    let nv = g.neighbors(v).intersection(g.vertices());
    let outside = g.vertices().difference(g.closed_neighborhood(v));
    match g.try_for_each_maximal_independent_set(outside, |m| {
        if nv.is_subset(g.closed_neighborhood_of_set(m)) {
            ControlFlow::Break(m)
        } else {
            ControlFlow::Continue(())
        }
    }) {
        ControlFlow::Break(m) => Some(m),
        ControlFlow::Continue(()) => None,
    }
}

pub fn is_shedding_vertex(g: &Graph, v: usize) -> bool {
    shedding_obstruction(g, v).is_none()
}

/// Complex form: no face of `lk_Δ v` is a facet of `del_Δ v`.
pub fn is_shedding_vertex_of_complex(delta: &SimplicialComplex, v: usize) -> bool {
    let deletion = delta.deletion(VertexSet::singleton(v));
    deletion
        .facets()
        .iter()
        .all(|d| !delta.contains_face(d.with(v)))
}

/// Whether `witness` shows that `v` is not a shedding vertex of `g`.
pub fn check_shedding_witness(g: &Graph, v: usize, witness: VertexSet) -> bool {
    let outside = g.vertices().difference(g.closed_neighborhood(v));
    witness.is_subset(outside)
        && g.is_independent(witness)
        && g.vertices()
            .without(v)
            .is_subset(g.closed_neighborhood_of_set(witness))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum VertexFailure {
    /// 1-based labels of an independent set of `G ∖ N[v]` maximal in `G ∖ v`.
    NotShedding { witness: Vec<usize> },
    DeletionNotVd,
    LinkNotVd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VdNode {
    Edgeless,
    Shed {
        /// 1-based.
        vertex: usize,
    },
    Refuted {
        /// `(1-based vertex, failure)` for every vertex of the subgraph.
        failures: Vec<(usize, VertexFailure)>,
    },
}

/// Recursion record: one node per induced subgraph visited on the proof path.
/// Children are implied: `Shed { v }` at `S` uses `S ∖ v` and `S ∖ N[v]`, and
/// the deletion/link failures at `S` refer to those same subgraphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VdTrace {
    pub verdict: VdVerdict,
    /// 1-based labels of the root subgraph.
    pub root: Vec<usize>,
    /// Keyed by the 1-based vertex list of each subgraph.
    pub nodes: Vec<(Vec<usize>, VdNode)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VdOptions {
    /// Distinct induced subgraphs the search may examine.
    pub state_budget: usize,
}

impl Default for VdOptions {
    fn default() -> Self {
        VdOptions {
            state_budget: 1_000_000,
        }
    }
}

struct VdSearch<'a> {
    g: &'a Graph,
    memo: HashMap<VertexSet, (bool, VdNode)>,
    budget: usize,
}

impl VdSearch<'_> {
    fn solve(&mut self, s: VertexSet) -> Option<bool> {
        if let Some((v, _)) = self.memo.get(&s) {
            return Some(*v);
        }
        if self.memo.len() >= self.budget {
            return None;
        }
        let sub = self.g.induced(s);
        if sub.edge_count() == 0 {
            self.memo.insert(s, (true, VdNode::Edgeless));
            return Some(true);
        }
        let mut failures = Vec::new();
        for v in s {
            if let Some(w) = shedding_obstruction(&sub, v) {
                failures.push((v + 1, VertexFailure::NotShedding { witness: w.to_labels() }));
                continue;
            }
            if !self.solve(s.without(v))? {
                failures.push((v + 1, VertexFailure::DeletionNotVd));
                continue;
            }
            if !self.solve(s.difference(sub.closed_neighborhood(v)))? {
                failures.push((v + 1, VertexFailure::LinkNotVd));
                continue;
            }
            self.memo.insert(s, (true, VdNode::Shed { vertex: v + 1 }));
            return Some(true);
        }
        self.memo.insert(s, (false, VdNode::Refuted { failures }));
        Some(false)
    }

    fn trace(&self, root: VertexSet, verdict: VdVerdict) -> VdTrace {
        let mut nodes = BTreeMap::new();
        let mut stack = vec![root];
        while let Some(s) = stack.pop() {
            if nodes.contains_key(&s) {
                continue;
            }
            let Some((_, node)) = self.memo.get(&s) else {
                continue;
            };
            let nbhd = |v: usize| self.g.induced(s).closed_neighborhood(v - 1);
            match node {
                VdNode::Edgeless => {}
                VdNode::Shed { vertex } => {
                    stack.push(s.without(vertex - 1));
                    stack.push(s.difference(nbhd(*vertex)));
                }
                VdNode::Refuted { failures } => {
                    for (v, f) in failures {
                        match f {
                            VertexFailure::NotShedding { .. } => {}
                            VertexFailure::DeletionNotVd => stack.push(s.without(v - 1)),
                            VertexFailure::LinkNotVd => stack.push(s.difference(nbhd(*v))),
                        }
                    }
                }
            }
            nodes.insert(s, node.clone());
        }
        VdTrace {
            verdict,
            root: root.to_labels(),
            nodes: nodes.into_iter().map(|(s, n)| (s.to_labels(), n)).collect(),
        }
    }
}

/// Decides vertex decomposability of `g` and returns a replayable trace.
pub fn is_vertex_decomposable(g: &Graph, opts: &VdOptions) -> (VdVerdict, VdTrace) {
    let mut search = VdSearch {
        g,
        memo: HashMap::new(),
        budget: opts.state_budget,
    };
    let verdict = match search.solve(g.vertices()) {
        Some(true) => VdVerdict::Decomposable,
        Some(false) => VdVerdict::NotDecomposable,
        None => VdVerdict::Inconclusive,
    };
    let trace = if verdict == VdVerdict::Inconclusive {
        VdTrace {
            verdict,
            root: g.vertices().to_labels(),
            nodes: Vec::new(),
        }
    } else {
        search.trace(g.vertices(), verdict)
    };
    (verdict, trace)
}

/// Re-checks every claim in a trace against `g` and returns the verdict it proves.
pub fn replay_vd_trace(g: &Graph, trace: &VdTrace) -> Result<VdVerdict> {
    if trace.verdict == VdVerdict::Inconclusive {
        return Ok(VdVerdict::Inconclusive);
    }
    let to_set = |labels: &[usize]| -> Result<VertexSet> {
        labels
            .iter()
            .map(|&l| {
                if l == 0 || l > g.ground_size() {
                    Err(Error::VertexOutOfRange {
                        label: l,
                        n: g.ground_size(),
                    })
                } else {
                    Ok(l - 1)
                }
            })
            .collect()
    };
    let mut nodes = HashMap::new();
    for (labels, node) in &trace.nodes {
        nodes.insert(to_set(labels)?, node);
    }
    let root = to_set(&trace.root)?;
    if root != g.vertices() {
        return Err(Error::Parse("trace root is not the vertex set of the graph".into()));
    }
    let mut proven: HashMap<VertexSet, bool> = HashMap::new();
    let ok = replay_node(g, root, &nodes, &mut proven)?;
    let verdict = if ok {
        VdVerdict::Decomposable
    } else {
        VdVerdict::NotDecomposable
    };
    if verdict != trace.verdict {
        return Err(Error::Parse("trace proves the opposite verdict".into()));
    }
    Ok(verdict)
}

fn replay_node(
    g: &Graph,
    s: VertexSet,
    nodes: &HashMap<VertexSet, &VdNode>,
    proven: &mut HashMap<VertexSet, bool>,
) -> Result<bool> {
    if let Some(&v) = proven.get(&s) {
        return Ok(v);
    }
    let bad = |msg: String| Error::Parse(format!("trace node {s}: {msg}"));
    let node = nodes.get(&s).ok_or_else(|| bad("missing".into()))?;
    let sub = g.induced(s);
    let verdict = match node {
        VdNode::Edgeless => {
            if sub.edge_count() != 0 {
                return Err(bad("claimed edgeless".into()));
            }
            true
        }
        VdNode::Shed { vertex } => {
            let v = vertex.checked_sub(1).filter(|&v| s.contains(v));
            let v = v.ok_or_else(|| bad(format!("x{vertex} not in subgraph")))?;
            if sub.edge_count() == 0 || !is_shedding_vertex(&sub, v) {
                return Err(bad(format!("x{vertex} is not a shedding vertex")));
            }
            let del = replay_node(g, s.without(v), nodes, proven)?;
            let lk = replay_node(g, s.difference(sub.closed_neighborhood(v)), nodes, proven)?;
            if !(del && lk) {
                return Err(bad(format!("children of x{vertex} are not decomposable")));
            }
            true
        }
        VdNode::Refuted { failures } => {
            if sub.edge_count() == 0 {
                return Err(bad("edgeless graph refuted".into()));
            }
            let covered: VertexSet = failures.iter().map(|(v, _)| v.saturating_sub(1)).collect();
            if covered != s {
                return Err(bad("failures do not cover every vertex".into()));
            }
            for (label, failure) in failures {
                let v = label - 1;
                let ok = match failure {
                    VertexFailure::NotShedding { witness } => {
                        let w: VertexSet = witness.iter().map(|l| l.saturating_sub(1)).collect();
                        check_shedding_witness(&sub, v, w)
                    }
                    VertexFailure::DeletionNotVd => !replay_node(g, s.without(v), nodes, proven)?,
                    VertexFailure::LinkNotVd => {
                        !replay_node(g, s.difference(sub.closed_neighborhood(v)), nodes, proven)?
                    }
                };
                if !ok {
                    return Err(bad(format!("failure claimed for x{label} does not hold")));
                }
            }
            false
        }
    };
    proven.insert(s, verdict);
    Ok(verdict)
}

/// Complex-level vertex decomposability. Deletions and links are memoized
/// across calls; the complexes passed in directly are not, so sweeping many
/// distinct complexes keeps the table small.
#[derive(Default)]
pub struct ComplexVd {
    memo: HashMap<Vec<VertexSet>, bool>,
    depth: usize,
}

impl ComplexVd {
    pub fn new() -> Self {
        Self::default()
    }

    /// A simplex (including `{∅}`) is vertex decomposable; otherwise some
    /// shedding vertex must have decomposable deletion and link. The void
    /// complex is not vertex decomposable.
    pub fn is_vertex_decomposable(&mut self, delta: &SimplicialComplex) -> bool {
        if delta.is_void() {
            return false;
        }
        if delta.is_simplex() {
            return true;
        }
        if let Some(&v) = self.memo.get(delta.facets()) {
            return v;
        }
        self.depth += 1;
        let result = delta.vertex_set().iter().any(|v| {
            let single = VertexSet::singleton(v);
            is_shedding_vertex_of_complex(delta, v)
                && self.is_vertex_decomposable(&delta.deletion(single))
                && self.is_vertex_decomposable(&delta.link(single).expect("vertex is a face"))
        });
        self.depth -= 1;
        if self.depth > 0 {
            self.memo.insert(delta.facets().to_vec(), result);
        }
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        let g = Graph::empty(4).unwrap();
        let (v, t) = is_vertex_decomposable(&g, &VdOptions::default());
        assert_eq!(v, VdVerdict::Decomposable);
        assert_eq!(replay_vd_trace(&g, &t).unwrap(), VdVerdict::Decomposable);
    }

    #[test]
    fn c5_is_vertex_decomposable() {
        let c5 = Graph::circulant(5, &[1]).unwrap();
        let (v, t) = is_vertex_decomposable(&c5, &VdOptions::default());
        assert_eq!(v, VdVerdict::Decomposable);
        assert_eq!(replay_vd_trace(&c5, &t).unwrap(), VdVerdict::Decomposable);
        let ind = SimplicialComplex::independence_complex(&c5);
        assert!(ComplexVd::new().is_vertex_decomposable(&ind));
    }

    #[test]
    fn four_cycle_is_not() {
        let c4 = Graph::circulant(4, &[1]).unwrap();
        let (v, t) = is_vertex_decomposable(&c4, &VdOptions::default());
        assert_eq!(v, VdVerdict::NotDecomposable);
        assert_eq!(replay_vd_trace(&c4, &t).unwrap(), VdVerdict::NotDecomposable);
    }

    #[test]
    fn shedding() {
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(is_shedding_vertex(&edge, 0));
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(!is_shedding_vertex(&g, 2));
        let lonely = Graph::empty(1).unwrap();
        assert!(!is_shedding_vertex(&lonely, 0));
        let ind = SimplicialComplex::independence_complex(&g);
        for v in 0..3 {
            assert_eq!(is_shedding_vertex(&g, v), is_shedding_vertex_of_complex(&ind, v));
        }
    }

    #[test]
    fn tampered_trace_is_rejected() {
        let c4 = Graph::circulant(4, &[1]).unwrap();
        let (_, mut t) = is_vertex_decomposable(&c4, &VdOptions::default());
        t.verdict = VdVerdict::Decomposable;
        assert!(replay_vd_trace(&c4, &t).is_err());
        let (_, mut t) = is_vertex_decomposable(&c4, &VdOptions::default());
        if let Some((_, VdNode::Refuted { failures })) = t.nodes.last_mut() {
            failures.pop();
        }
        assert!(replay_vd_trace(&c4, &t).is_err());
    }

    #[test]
    fn budget_gives_inconclusive() {
        let c16 = Graph::circulant(16, &[1, 4, 8]).unwrap();
        let (v, _) = is_vertex_decomposable(&c16, &VdOptions { state_budget: 3 });
        assert_eq!(v, VdVerdict::Inconclusive);
    }
}
