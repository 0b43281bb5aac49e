//! Exact matching and induced matching search on vertex masks.

use alloc::vec::Vec;

use crate::graph::search::{bit, clique_cover_bound, components, non_isolated};

/// A maximum matching of the subgraph induced on `mask`, as bit pairs.
pub(crate) fn maximum_matching(adj: &[u64], mask: u64) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for comp in components(adj, non_isolated(adj, mask)) {
        let mut best = Vec::new();
        let mut cur = Vec::new();
        matching_rec(adj, comp, &mut cur, &mut best);
        out.extend(best);
    }
    out.sort_unstable();
    out
}

fn matching_rec(adj: &[u64], p: u64, cur: &mut Vec<(u32, u32)>, best: &mut Vec<(u32, u32)>) {
    let p = non_isolated(adj, p);
    let bound: usize = components(adj, p)
        .iter()
        .map(|c| c.count_ones() as usize / 2)
        .sum();
    if cur.len() + bound <= best.len() {
        return;
    }
    if p == 0 {
        *best = cur.clone();
        return;
    }
    // minimum-degree vertex; a leaf is always matched to its neighbour
    let mut v = p.trailing_zeros();
    let mut dv = u32::MAX;
    let mut it = p;
    while it != 0 {
        let u = it.trailing_zeros();
        it &= it - 1;
        let d = (adj[u as usize] & p).count_ones();
        if d < dv {
            v = u;
            dv = d;
        }
    }
    let mut nbrs = adj[v as usize] & p;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros();
        nbrs &= nbrs - 1;
        cur.push((v.min(u), v.max(u)));
        matching_rec(adj, p & !(bit(u) | bit(v)), cur, best);
        cur.pop();
        if dv == 1 {
            return;
        }
    }
    matching_rec(adj, p & !bit(v), cur, best);
}

/// A maximum induced matching of the subgraph induced on `mask`.
pub(crate) fn maximum_induced_matching(adj: &[u64], mask: u64) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for comp in components(adj, non_isolated(adj, mask)) {
        let mut best = Vec::new();
        let mut cur = Vec::new();
        induced_rec(adj, comp, &mut cur, &mut best);
        out.extend(best);
    }
    out.sort_unstable();
    out
}

fn induced_rec(adj: &[u64], p: u64, cur: &mut Vec<(u32, u32)>, best: &mut Vec<(u32, u32)>) {
    let p = non_isolated(adj, p);
    if p == 0 {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    }
    // every clique meets at most one edge of an induced matching
    let bound = (clique_cover_bound(adj, p) as usize).min(p.count_ones() as usize / 2);
    if cur.len() + bound <= best.len() {
        return;
    }
    let mut v = p.trailing_zeros();
    let mut dv = 0;
    let mut it = p;
    while it != 0 {
        let u = it.trailing_zeros();
        it &= it - 1;
        let d = (adj[u as usize] & p).count_ones();
        if d > dv {
            v = u;
            dv = d;
        }
    }
    let nv = adj[v as usize] | bit(v);
    let mut nbrs = adj[v as usize] & p;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros();
        nbrs &= nbrs - 1;
        cur.push((v.min(u), v.max(u)));
        induced_rec(adj, p & !(nv | adj[u as usize] | bit(u)), cur, best);
        cur.pop();
    }
    induced_rec(adj, p & !bit(v), cur, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, k2, Graph};

    fn sizes(g: &Graph) -> (usize, usize) {
        let all = g.vertices().bits();
        (
            maximum_matching(g.adj_bits(), all).len(),
            maximum_induced_matching(g.adj_bits(), all).len(),
        )
    }

    #[test]
    fn small_graphs() {
        assert_eq!(sizes(&cycle(5).unwrap()), (2, 1));
        assert_eq!(sizes(&cycle(8).unwrap()), (4, 2));
        assert_eq!(sizes(&k2()), (1, 1));
        assert_eq!(
            sizes(&Graph::disjoint_union(&[k2(), k2()]).unwrap()),
            (2, 2)
        );
        assert_eq!(sizes(&Graph::empty(3).unwrap()), (0, 0));
    }
}
