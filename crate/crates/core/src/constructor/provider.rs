use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::FieldSpec;
use crate::edge_ideal::{induced_matching_number, invariant_report, regularity};
use crate::graph::{cycle, k2, Graph};
use crate::{Error, Result};

/// Source of connected gap-free graphs with `reg = dim = r`.
///
/// `r = 1` and `r = 2` are built in (`K2` and the pentagon). Larger `r` come
/// from candidates registered by the caller or from a seeded random search
/// limited to `budget` trials. Every graph is checked before it is served.
#[derive(Clone, Debug)]
pub struct BaseGraphProvider {
    field: FieldSpec,
    verified: BTreeMap<usize, (Graph, String)>,
    candidates: BTreeMap<usize, Vec<(Graph, String)>>,
    budget: u64,
    seed: u64,
}

impl BaseGraphProvider {
    pub fn new(field: FieldSpec) -> Self {
        let mut candidates = BTreeMap::new();
        candidates.insert(1, alloc::vec![(k2(), String::from("built-in: K2"))]);
        candidates.insert(
            2,
            alloc::vec![(cycle(5).expect("C5"), String::from("built-in: pentagon C5"))],
        );
        BaseGraphProvider {
            field,
            verified: BTreeMap::new(),
            candidates,
            budget: 0,
            seed: 0,
        }
    }

    /// Enables the random search for unregistered `r`.
    pub fn with_search(mut self, budget: u64, seed: u64) -> Self {
        self.budget = budget;
        self.seed = seed;
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Registers an unverified candidate for `r`; it is checked when first
    /// requested and skipped if it fails.
    pub fn add_candidate(&mut self, r: usize, g: Graph, provenance: impl Into<String>) {
        self.candidates
            .entry(r)
            .or_default()
            .push((g, provenance.into()));
    }

    /// Where the graph served for `r` came from, once it has been served.
    pub fn provenance(&self, r: usize) -> Option<&str> {
        self.verified.get(&r).map(|(_, p)| p.as_str())
    }

    /// A verified base graph for `r`.
    pub fn base(&mut self, r: usize) -> Result<Graph> {
        if r == 0 {
            return Err(Error::InvalidParameter("base graphs need r >= 1".into()));
        }
        if let Some((g, _)) = self.verified.get(&r) {
            return Ok(g.clone());
        }
        let field = self.field;
        let listed = self.candidates.get(&r).cloned().unwrap_or_default();
        for (g, note) in listed {
            if is_valid_base(&g, r, field) {
                self.verified.insert(r, (g.clone(), note));
                return Ok(g);
            }
        }
        if let Some(g) = self.search(r) {
            let note = format!("random search, seed {}", self.seed);
            self.verified.insert(r, (g.clone(), note));
            return Ok(g);
        }
        Err(Error::BaseUnavailable(r))
    }

    fn search(&self, r: usize) -> Option<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(r as u64);
        for _ in 0..self.budget {
            let n = rng.gen_range(2 * r + 1..=(4 * r).min(crate::MAX_VERTICES));
            let p: f64 = rng.gen_range(0.3..0.85);
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).ok()?;
            if is_valid_base(&g, r, self.field) {
                return Some(g);
            }
        }
        None
    }
}

/// Connected, `im = 1`, `reg = dim = r`; cheapest tests first.
pub(crate) fn is_valid_base(g: &Graph, r: usize, field: FieldSpec) -> bool {
    if g.edge_count() == 0 || g.has_isolated_vertex() || !g.is_connected() {
        return false;
    }
    if g.independence_number() != r || induced_matching_number(g) != 1 {
        return false;
    }
    if regularity(g, field) != r {
        return false;
    }
    matches!(invariant_report(g, field), Ok(rep) if rep.im == 1 && rep.reg == r && rep.dim == r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_and_failures() {
        let mut p = BaseGraphProvider::new(FieldSpec::Rationals);
        assert_eq!(p.base(1), Ok(k2()));
        assert_eq!(p.base(2), Ok(cycle(5).unwrap()));
        assert_eq!(p.provenance(2), Some("built-in: pentagon C5"));
        assert_eq!(p.base(3), Err(Error::BaseUnavailable(3)));
        // a bad candidate is skipped
        p.add_candidate(3, cycle(8).unwrap(), "octagon");
        assert_eq!(p.base(3), Err(Error::BaseUnavailable(3)));
    }
}
