//! Finite simple graphs on the vertex labels `1..=n`.
//!
//! A [`Graph`] keeps one neighbourhood bitmask per vertex, so every vertex
//! subset is a single `u64` and subset enumeration stays cheap. Edges are
//! reported in canonical order: `(u, v)` with `u < v`, sorted
//! lexicographically.

pub(crate) mod search;
mod vertex_set;

use alloc::vec::Vec;
use core::fmt;

pub use search::IndependentSets;
pub use vertex_set::{Members, VertexSet};

use crate::{Error, Result};

/// Largest supported vertex count; any vertex subset fits a machine word.
pub const MAX_VERTICES: usize = 62;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// `adj[i]` is the neighbourhood of vertex `i + 1`, bit `j` standing for `j + 1`.
    adj: Vec<u64>,
}

impl Graph {
    /// The graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: alloc::vec![0; n],
        })
    }

    /// Builds a graph from 1-based vertex pairs. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidEdge(u, v));
            }
            g.adj[u - 1] |= 1 << (v - 1);
            g.adj[v - 1] |= 1 << (u - 1);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Canonically ordered edge list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            let later = self.adj[u - 1] >> u;
            for off in (VertexSet::from_bits(later)).iter() {
                out.push((u, u + off));
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u - 1] & (1 << (v - 1)) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub(crate) fn adj_bits(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn check_subset(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).min_vertex() {
            Some(v) => Err(Error::InvalidVertex(v, self.n)),
            None => Ok(()),
        }
    }

    /// Induced subgraph on `w`, relabelled `1..=|w|` by increasing original
    /// label. The second component maps new labels (index + 1) to old ones.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(w)?;
        let map: Vec<usize> = w.iter().collect();
        let mut g = Graph::empty(map.len())?;
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        Ok((g, map))
    }

    pub fn is_independent(&self, s: VertexSet) -> Result<bool> {
        self.check_subset(s)?;
        Ok(s.iter().all(|v| self.adj[v - 1] & s.bits() == 0))
    }

    /// Maximum size of an independent set; `dim R/I(G)` when `n >= 1`.
    pub fn independence_number(&self) -> usize {
        search::alpha(&self.adj, self.vertices().bits()) as usize
    }

    /// All independent sets of size exactly `k`, in lexicographic order of
    /// their member lists.
    pub fn independent_sets(&self, k: usize) -> IndependentSets<'_> {
        IndependentSets::new(self, k)
    }

    /// Lexicographically least independent set of size `k`, if any.
    pub fn first_independent_set(&self, k: usize) -> Option<VertexSet> {
        search::first_independent(&self.adj, self.vertices().bits(), k).map(VertexSet::from_bits)
    }

    /// `f[i]` = number of independent sets of size `i`.
    pub fn independent_set_counts(&self) -> Vec<u64> {
        search::independence_counts(&self.adj, self.vertices().bits())
    }

    /// Disjoint union; part `i` is shifted by the vertex count of the parts
    /// before it.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter(
                "disjoint union of no graphs".into(),
            ));
        }
        let total: usize = parts.iter().map(|g| g.n).sum();
        let mut g = Graph::empty(total)?;
        let mut offset = 0;
        for part in parts {
            for i in 0..part.n {
                g.adj[offset + i] = part.adj[i] << offset;
            }
            offset += part.n;
        }
        Ok(g)
    }

    /// Adds vertex `n + 1` adjacent to exactly `nbrs`.
    pub fn with_new_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        self.check_subset(nbrs)?;
        let mut g = Graph::empty(self.n + 1)?;
        let w = self.n;
        for i in 0..self.n {
            g.adj[i] = self.adj[i];
            if nbrs.contains(i + 1) {
                g.adj[i] |= 1 << w;
            }
        }
        g.adj[w] = nbrs.bits();
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (1..=self.n).filter(|&v| self.adj[v - 1] == 0).collect()
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        search::components(&self.adj, self.vertices().bits())
            .into_iter()
            .map(VertexSet::from_bits)
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// The cycle `1-2-...-n-1`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(alloc::format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// The path `1-2-...-n`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// The complete graph on two vertices.
pub fn k2() -> Graph {
    Graph::from_edges(2, &[(1, 2)]).expect("K2 is valid")
}
