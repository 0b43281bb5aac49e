//! Regularity of `R/I(G)` without scanning all vertex subsets.
//!
//! For a vertex `x`, `Ind(G)` is the union of `Ind(G - x)` and the cone over
//! `Ind(G - N[x])`, glued along the latter. With `r1 = reg(G - x)` and
//! `r2 = reg(G - N[x])` this gives `r1 <= reg(G) <= max(r1, r2 + 1)`, and the
//! long exact sequence shows `reg(G) = r2 + 1` whenever `r2 > r1`. Only the
//! tie `r1 = r2 = t` needs more work: the answer is `t + 1` exactly when some
//! induced subgraph has `H̃_t(Ind) ≠ 0`, which is settled by the independence
//! number, an induced matching, the homology of the whole graph, or the
//! vertex-deleted subgraphs, in that order.

use alloc::vec::Vec;

use hashbrown::HashMap;

use super::matching::maximum_induced_matching;
use crate::complex::{homology_rank_between, FieldSpec};
use crate::graph::search::{alpha, bit, components, max_degree_vertex, non_isolated};
use crate::graph::{Graph, VertexSet};

/// Large prime used to rule out rational homology cheaply: ranks mod `p`
/// never exceed ranks over `Q`, so zero homology mod `p` implies zero over `Q`.
const SCREEN_PRIME: u64 = 2_147_483_647;

pub(crate) struct RegularityEngine<'a> {
    adj: &'a [u64],
    field: FieldSpec,
    memo: HashMap<u64, (u32, u64)>,
}

impl<'a> RegularityEngine<'a> {
    pub(crate) fn new(adj: &'a [u64], field: FieldSpec) -> Self {
        RegularityEngine {
            adj,
            field,
            memo: HashMap::new(),
        }
    }

    /// `reg` of the subgraph induced on `mask`, with a vertex set `W` such
    /// that `H̃_{reg-1}(Ind(G_W)) ≠ 0` (empty when `reg = 0`).
    pub(crate) fn regularity(&mut self, mask: u64) -> (u32, u64) {
        let mask = non_isolated(self.adj, mask);
        if mask == 0 {
            return (0, 0);
        }
        if let Some(&hit) = self.memo.get(&mask) {
            return hit;
        }
        let comps = components(self.adj, mask);
        let out = if comps.len() > 1 {
            comps.into_iter().fold((0, 0), |(r, w), c| {
                let (rc, wc) = self.regularity(c);
                (r + rc, w | wc)
            })
        } else {
            self.connected(mask)
        };
        self.memo.insert(mask, out);
        out
    }

    fn connected(&mut self, mask: u64) -> (u32, u64) {
        if mask.count_ones() == 2 {
            return (1, mask);
        }
        let adj = self.adj;
        let x = max_degree_vertex(adj, mask).expect("mask is nonempty");
        let nx = adj[x as usize] & mask;
        let (r1, w1) = self.regularity(mask & !bit(x));
        let (r2, w2) = self.regularity(mask & !(nx | bit(x)));
        if r2 < r1 {
            return (r1, w1);
        }
        if r2 > r1 {
            return (r2 + 1, w2 | nx | bit(x));
        }
        let t = r1;
        if alpha(adj, mask) <= t {
            return (t, w1);
        }
        let im = maximum_induced_matching(adj, mask);
        if im.len() as u32 > t {
            let w = im.iter().fold(0, |a, &(u, v)| a | bit(u) | bit(v));
            return (t + 1, w);
        }
        if top_homology_nonzero(adj, mask, t as usize, self.field) {
            return (t + 1, mask);
        }
        // a witness for t + 1 must contain x, so it avoids some other vertex
        let mut rest = mask & !bit(x);
        while rest != 0 {
            let y = rest.trailing_zeros();
            rest &= rest - 1;
            let (ry, wy) = self.regularity(mask & !bit(y));
            if ry > t {
                return (t + 1, wy);
            }
        }
        (t, w1)
    }
}

/// Removes `v` whenever some other `u` has `N(u) ⊆ N(v)`; the independence
/// complex keeps its homotopy type under each such removal.
pub(crate) fn fold_reduce(adj: &[u64], mut mask: u64) -> u64 {
    loop {
        let mut changed = false;
        let mut it = mask;
        'outer: while it != 0 {
            let u = it.trailing_zeros();
            it &= it - 1;
            if mask & bit(u) == 0 {
                continue;
            }
            let nu = adj[u as usize] & mask;
            let mut others = mask & !bit(u);
            while others != 0 {
                let v = others.trailing_zeros();
                others &= others - 1;
                if nu & !adj[v as usize] == 0 {
                    mask &= !bit(v);
                    changed = true;
                    continue 'outer;
                }
            }
        }
        if !changed {
            return mask;
        }
    }
}

/// Whether `H̃_t(Ind(G[mask]); field) ≠ 0`.
pub(crate) fn top_homology_nonzero(adj: &[u64], mask: u64, t: usize, field: FieldSpec) -> bool {
    homology_rank_of_ind(adj, mask, t, field) > 0
}

/// Rank of `H̃_t(Ind(G[mask]); field)`.
pub(crate) fn homology_rank_of_ind(adj: &[u64], mask: u64, t: usize, field: FieldSpec) -> usize {
    let reduced = fold_reduce(adj, mask);
    if non_isolated(adj, reduced) != reduced {
        // an isolated vertex makes the complex a cone
        return 0;
    }
    if (alpha(adj, reduced) as usize) < t + 1 {
        return 0;
    }
    let layers: Vec<Vec<u64>> = (t..=t + 2)
        .map(|k| independent_sets_of_size(adj, reduced, k))
        .collect();
    let rank = |f: FieldSpec| homology_rank_between(&layers[0], &layers[1], &layers[2], f);
    match field {
        FieldSpec::Rationals => {
            if rank(FieldSpec::Prime(SCREEN_PRIME)) == 0 {
                0
            } else {
                rank(field)
            }
        }
        FieldSpec::Prime(_) => rank(field),
    }
}

fn independent_sets_of_size(adj: &[u64], mask: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(adj: &[u64], cand: u64, need: usize, chosen: u64, out: &mut Vec<u64>) {
        if need == 0 {
            out.push(chosen);
            return;
        }
        let mut it = cand;
        while (it.count_ones() as usize) >= need {
            let v = it.trailing_zeros();
            it &= it - 1;
            rec(adj, it & !adj[v as usize], need - 1, chosen | bit(v), out);
        }
    }
    rec(adj, mask, k, 0, &mut out);
    out
}

pub(crate) fn regularity_with_witness(g: &Graph, field: FieldSpec) -> (usize, VertexSet) {
    let mut engine = RegularityEngine::new(g.adj_bits(), field);
    let (r, w) = engine.regularity(g.vertices().bits());
    (r as usize, VertexSet::from_bits(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, k2, path};

    fn reg(g: &Graph) -> usize {
        regularity_with_witness(g, FieldSpec::Rationals).0
    }

    #[test]
    fn known_values() {
        assert_eq!(reg(&k2()), 1);
        assert_eq!(reg(&cycle(5).unwrap()), 2);
        assert_eq!(reg(&cycle(8).unwrap()), 3);
        assert_eq!(reg(&cycle(6).unwrap()), 2);
        assert_eq!(reg(&cycle(7).unwrap()), 2);
        assert_eq!(reg(&path(7).unwrap()), 2);
        assert_eq!(reg(&Graph::empty(4).unwrap()), 0);
        assert_eq!(
            reg(&Graph::disjoint_union(&[k2(), cycle(5).unwrap()]).unwrap()),
            3
        );
    }

    #[test]
    fn folds_keep_homology() {
        let g = cycle(5).unwrap();
        let all = g.vertices().bits();
        assert_eq!(fold_reduce(g.adj_bits(), all), all);
        assert_eq!(
            homology_rank_of_ind(g.adj_bits(), all, 1, FieldSpec::Rationals),
            1
        );
        // path P4: Ind is contractible
        let p = path(4).unwrap();
        assert_eq!(
            homology_rank_of_ind(p.adj_bits(), p.vertices().bits(), 0, FieldSpec::Rationals),
            0
        );
    }
}
