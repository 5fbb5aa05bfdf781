//! The two counterexample graphs and their published data, verbatim.

use crate::decomp::shelling::ShellingCertificate;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Edges of the 8-vertex counterexample, 1-based.
pub const SMALL_EDGES: [(usize, usize); 13] = [
    (1, 5), (1, 6), (1, 7), (1, 8),
    (2, 5), (2, 6), (2, 7), (2, 8),
    (3, 6), (3, 7),
    (4, 6), (4, 8),
    (7, 8),
];

/// Minimal primes of the 8-vertex edge ideal, as published.
pub const SMALL_PRIMES: [&[usize]; 6] = [
    &[5, 6, 7, 8],
    &[1, 2, 3, 4, 7],
    &[1, 2, 3, 4, 8],
    &[1, 2, 3, 6, 8],
    &[1, 2, 4, 6, 7],
    &[1, 2, 6, 7, 8],
];

/// The 8-vertex graph: sequentially Cohen-Macaulay, height 4, no degree-one
/// vertex, `reg(R/I) = 2` but induced matching number 1.
pub fn small_graph() -> Graph {
    Graph::from_labeled_edges(8, SMALL_EDGES).expect("fixture edges are valid")
}

/// Distances of the circulant `C_16(1, 4, 8)`.
pub const C16_DISTANCES: [usize; 3] = [1, 4, 8];

pub fn c16() -> Graph {
    Graph::circulant(16, &C16_DISTANCES).expect("valid circulant")
}

/// Vertices of `C_16(1,4,8)` joined to all of `x_17..x_26`.
pub const G26_JOIN_SIDE: [usize; 13] = [1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 15, 16];

/// Vertices of the large facet `F_0`.
pub const G26_F0: [usize; 13] = [9, 11, 14, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26];

/// The 170 generators of the 26-variable edge ideal, in the order of the published table.
pub fn g26_generator_table() -> Vec<(usize, usize)> {
    let mut gens = Vec::with_capacity(170);
    let left = [16, 15, 13, 12, 10, 8, 7, 6, 5, 4, 3, 2, 1];
    for b in (17..=26).rev() {
        gens.extend(left.iter().map(|&a| (a, b)));
    }
    gens.extend_from_slice(&[
        (15, 16), (12, 16), (8, 16), (4, 16), (1, 16), (14, 15), (11, 15),
        (7, 15), (3, 15), (13, 14), (10, 14), (6, 14), (2, 14),
        (12, 13), (9, 13), (5, 13), (1, 13), (11, 12), (8, 12), (4, 12),
        (10, 11), (7, 11), (3, 11), (9, 10), (6, 10), (2, 10),
        (8, 9), (5, 9), (1, 9), (7, 8), (4, 8), (6, 7), (3, 7),
        (5, 6), (2, 6), (4, 5), (1, 5), (3, 4), (2, 3),
        (1, 2),
    ]);
    gens
}

/// The 26-vertex graph: `C_16(1,4,8)` on `x_1..x_16` plus the complete join of
/// `x_17..x_26` to [`G26_JOIN_SIDE`].
pub fn g26() -> Graph {
    let c16 = c16();
    let mut edges: Vec<(usize, usize)> = c16.edges().into_iter().map(|e| (e.0, e.1)).collect();
    for &a in &G26_JOIN_SIDE {
        for b in 17..=26 {
            edges.push((a - 1, b - 1));
        }
    }
    Graph::from_edges(26, edges).expect("fixture edges are valid")
}

/// `F_1..F_80`, the published shelling order of `Ind(C_16(1,4,8))`.
pub const C16_SHELLING: [[usize; 4]; 80] = [
    [9, 11, 14, 16], [5, 11, 14, 16], [7, 9, 14, 16], [3, 9, 14, 16], [5, 7, 14, 16],
    [3, 5, 14, 16], [6, 9, 11, 16], [5, 7, 10, 16], [2, 5, 11, 16], [2, 9, 11, 16],
    [2, 7, 13, 16], [7, 10, 13, 16], [2, 11, 13, 16], [6, 11, 13, 16], [3, 5, 10, 16],
    [3, 10, 13, 16], [3, 6, 13, 16], [2, 7, 9, 16], [3, 6, 9, 16], [2, 5, 7, 16],
    [7, 9, 12, 14], [1, 4, 10, 15], [1, 8, 10, 15], [5, 8, 10, 15], [1, 10, 12, 15],
    [4, 10, 13, 15], [8, 10, 13, 15], [5, 10, 12, 15], [3, 9, 12, 14], [3, 8, 10, 13],
    [3, 5, 8, 14], [5, 8, 11, 14], [6, 8, 11, 13], [6, 8, 13, 15], [4, 6, 13, 15],
    [2, 8, 13, 15], [2, 8, 11, 13], [1, 4, 6, 15], [4, 6, 9, 15], [6, 9, 12, 15],
    [1, 6, 12, 15], [1, 6, 8, 15], [2, 4, 13, 15], [2, 9, 12, 15], [2, 4, 9, 15],
    [4, 6, 11, 13], [4, 9, 11, 14], [4, 7, 9, 14], [2, 4, 11, 13], [5, 7, 10, 12],
    [1, 3, 8, 14], [1, 8, 11, 14], [1, 3, 12, 14], [1, 7, 12, 14], [1, 7, 10, 12],
    [3, 6, 8, 13], [5, 7, 12, 14], [3, 5, 12, 14], [3, 5, 10, 12], [1, 3, 10, 12],
    [2, 7, 9, 12], [3, 6, 9, 12], [2, 5, 7, 12], [2, 5, 8, 11], [1, 6, 8, 11],
    [2, 4, 9, 11], [4, 6, 9, 11], [1, 3, 6, 12], [2, 5, 8, 15], [2, 5, 12, 15],
    [1, 4, 6, 11], [1, 4, 11, 14], [1, 4, 7, 14], [3, 5, 8, 10], [1, 3, 8, 10],
    [1, 4, 7, 10], [4, 7, 10, 13], [1, 3, 6, 8], [2, 4, 7, 9], [2, 4, 7, 13],
];

fn labels_to_set(labels: &[usize]) -> VertexSet {
    labels.iter().map(|l| l - 1).collect()
}

/// `F_1..F_80` as a certificate for `Ind(C_16(1,4,8))`.
pub fn c16_shelling_order() -> ShellingCertificate {
    ShellingCertificate(C16_SHELLING.iter().map(|f| labels_to_set(f)).collect())
}

/// `F_0, F_1, ..., F_80`, the published shelling order of `Ind(G)` for the 26-vertex graph.
pub fn listed_g26_order() -> ShellingCertificate {
    let mut order = vec![labels_to_set(&G26_F0)];
    order.extend(c16_shelling_order().0);
    ShellingCertificate(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn small_graph_shape() {
        let g = small_graph();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 13);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn g26_matches_generator_table() {
        let g = g26();
        assert_eq!(g.edge_count(), 170);
        let table = g26_generator_table();
        assert_eq!(table.len(), 170);
        let mut from_table: Vec<Edge> = table.iter().map(|&(a, b)| Edge::new(a - 1, b - 1)).collect();
        from_table.sort();
        from_table.dedup();
        assert_eq!(from_table, g.edges());
    }

    #[test]
    fn g26_neighborhoods() {
        let g = g26();
        assert_eq!(g.neighbors(25).to_labels(), G26_JOIN_SIDE.to_vec());
        let low = g.neighbors(15).intersection(VertexSet::full(15));
        assert_eq!(low.to_labels(), vec![1, 4, 8, 12, 15]);
    }

    #[test]
    fn shelling_order_shape() {
        let order = listed_g26_order();
        assert_eq!(order.0.len(), 81);
        assert_eq!(order.0[0].len(), 13);
        assert_eq!(order.0[21].to_labels(), vec![7, 9, 12, 14]);
    }
}
