//! Bitmask search kernels shared by the graph-level invariants.
//!
//! All functions take the raw adjacency table and a vertex mask (bit `i` is
//! vertex `i + 1`) and only look at the subgraph induced on that mask.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{Graph, VertexSet};

#[inline]
pub(crate) fn bit(v: u32) -> u64 {
    1u64 << v
}

/// Vertices of `mask` with at least one neighbour inside `mask`.
pub(crate) fn non_isolated(adj: &[u64], mask: u64) -> u64 {
    let mut out = 0;
    let mut it = mask;
    while it != 0 {
        let v = it.trailing_zeros();
        it &= it - 1;
        if adj[v as usize] & mask != 0 {
            out |= bit(v);
        }
    }
    out
}

/// Vertex of largest degree inside `mask`; ties go to the smallest label.
pub(crate) fn max_degree_vertex(adj: &[u64], mask: u64) -> Option<u32> {
    let mut best: Option<(u32, u32)> = None;
    let mut it = mask;
    while it != 0 {
        let v = it.trailing_zeros();
        it &= it - 1;
        let d = (adj[v as usize] & mask).count_ones();
        if best.is_none_or(|(_, bd)| d > bd) {
            best = Some((v, d));
        }
    }
    best.map(|(v, _)| v)
}

pub(crate) fn components(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros();
            frontier &= frontier - 1;
            let new = adj[v as usize] & mask & !comp;
            comp |= new;
            frontier |= new;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Size of a greedy clique cover of `mask`; an upper bound on the
/// independence number of the induced subgraph.
pub(crate) fn clique_cover_bound(adj: &[u64], mask: u64) -> u32 {
    let mut rest = mask;
    let mut count = 0;
    while rest != 0 {
        let v = rest.trailing_zeros();
        let mut clique = bit(v);
        let mut cand = adj[v as usize] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros();
            clique |= bit(u);
            cand &= adj[u as usize];
        }
        rest &= !clique;
        count += 1;
    }
    count
}

pub(crate) fn alpha(adj: &[u64], mask: u64) -> u32 {
    let mut best = 0;
    alpha_rec(adj, mask, 0, &mut best);
    best
}

fn alpha_rec(adj: &[u64], mut p: u64, mut size: u32, best: &mut u32) {
    // vertices of degree <= 1 always belong to some maximum independent set
    loop {
        let mut changed = false;
        let mut it = p;
        while it != 0 {
            let v = it.trailing_zeros();
            it &= it - 1;
            if p & bit(v) == 0 {
                continue;
            }
            let nb = adj[v as usize] & p;
            if nb.count_ones() <= 1 {
                size += 1;
                p &= !(nb | bit(v));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if p == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(adj, p) <= *best {
        return;
    }
    let v = max_degree_vertex(adj, p).expect("p is nonempty");
    alpha_rec(adj, p & !(adj[v as usize] | bit(v)), size + 1, best);
    alpha_rec(adj, p & !bit(v), size, best);
}

/// Lexicographically least independent set of size `k` inside `mask`.
pub(crate) fn first_independent(adj: &[u64], mask: u64, k: usize) -> Option<u64> {
    fn rec(adj: &[u64], cand: u64, need: usize, chosen: u64) -> Option<u64> {
        if need == 0 {
            return Some(chosen);
        }
        if (cand.count_ones() as usize) < need {
            return None;
        }
        if need >= 2 && (alpha(adj, cand) as usize) < need {
            return None;
        }
        let mut it = cand;
        while it != 0 {
            let v = it.trailing_zeros();
            it &= it - 1;
            if let Some(found) = rec(adj, it & !adj[v as usize], need - 1, chosen | bit(v)) {
                return Some(found);
            }
            if (it.count_ones() as usize) < need {
                return None;
            }
        }
        None
    }
    rec(adj, mask, k, 0)
}

/// Number of independent sets of each size inside `mask` (the coefficients
/// of the independence polynomial).
pub(crate) fn independence_counts(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut memo = HashMap::new();
    counts_rec(adj, mask, &mut memo)
}

fn counts_rec(adj: &[u64], mask: u64, memo: &mut HashMap<u64, Vec<u64>>) -> Vec<u64> {
    let live = non_isolated(adj, mask);
    let free = (mask & !live).count_ones() as usize;
    let core = if live == 0 {
        vec![1]
    } else if let Some(hit) = memo.get(&live) {
        hit.clone()
    } else {
        let v = max_degree_vertex(adj, live).expect("live is nonempty");
        let without = counts_rec(adj, live & !bit(v), memo);
        let with = counts_rec(adj, live & !(adj[v as usize] | bit(v)), memo);
        let mut out = without;
        if out.len() < with.len() + 1 {
            out.resize(with.len() + 1, 0);
        }
        for (i, c) in with.into_iter().enumerate() {
            out[i + 1] += c;
        }
        memo.insert(live, out.clone());
        out
    };
    if free == 0 {
        return core;
    }
    // isolated vertices multiply by (1 + t)^free
    let mut out = core;
    for _ in 0..free {
        out.resize(out.len() + 1, 0);
        for i in (1..out.len()).rev() {
            out[i] += out[i - 1];
        }
    }
    out
}

/// Streaming enumerator behind [`Graph::independent_sets`].
pub struct IndependentSets<'a> {
    adj: &'a [u64],
    k: usize,
    stack: Vec<u64>,
    chosen: Vec<u32>,
    empty_pending: bool,
}

impl<'a> IndependentSets<'a> {
    pub(super) fn new(g: &'a Graph, k: usize) -> Self {
        let all = g.vertices().bits();
        IndependentSets {
            adj: g.adj_bits(),
            k,
            stack: if k == 0 || k > g.n() {
                Vec::new()
            } else {
                vec![all]
            },
            chosen: Vec::new(),
            empty_pending: k == 0,
        }
    }
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.empty_pending {
            self.empty_pending = false;
            return Some(VertexSet::EMPTY);
        }
        loop {
            let depth = self.chosen.len();
            let top = self.stack.last_mut()?;
            if (top.count_ones() as usize) < self.k - depth {
                self.stack.pop();
                self.chosen.pop();
                continue;
            }
            let v = top.trailing_zeros();
            *top &= !bit(v);
            if depth + 1 == self.k {
                let mut bits = bit(v);
                for &c in &self.chosen {
                    bits |= bit(c);
                }
                return Some(VertexSet::from_bits(bits));
            }
            let next = *top & !self.adj[v as usize];
            self.chosen.push(v);
            self.stack.push(next);
        }
    }
}
