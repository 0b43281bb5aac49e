#![allow(dead_code)]

use edgereg_core::Graph;
use proptest::prelude::*;

/// Graph on `lo..=hi` vertices with independent coin flips per pair.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Drops isolated vertices, relabelling the rest.
pub fn strip(g: &Graph) -> Graph {
    let keep = g.vertices().difference(g.isolated_vertices());
    g.induced_subgraph(keep).unwrap().0
}

/// Same as [`graph`] but without isolated vertices and with at least one edge.
pub fn clean_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    graph(lo, hi)
        .prop_map(|g| strip(&g))
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
}

/// A graph together with a random independent set, picked greedily from a
/// random vertex order.
pub fn graph_with_independent(
    lo: usize,
    hi: usize,
) -> impl Strategy<Value = (Graph, edgereg_core::VertexSet)> {
    clean_graph(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        let order = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
        let keep = proptest::collection::vec(any::<bool>(), n);
        (Just(g), order, keep).prop_map(|(g, order, keep)| {
            let s = independent_from(&g, &order, &keep, g.vertices());
            (g, s)
        })
    })
}

/// Greedy independent subset of `pool` in the given order, skipping vertices
/// whose `keep` flag is off.
pub fn independent_from(
    g: &Graph,
    order: &[usize],
    keep: &[bool],
    pool: edgereg_core::VertexSet,
) -> edgereg_core::VertexSet {
    let mut s = edgereg_core::VertexSet::EMPTY;
    for (&v, &k) in order.iter().zip(keep) {
        if k && pool.contains(v) && g.neighbors(v).intersection(s).is_empty() {
            s.insert(v);
        }
    }
    s
}
