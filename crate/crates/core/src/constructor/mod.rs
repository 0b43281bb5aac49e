//! Construction of connected graphs with prescribed induced matching number
//! `a`, regularity `r` and h-polynomial degree `s`.
//!
//! The build starts from a gap-free base with `reg = dim = r - a + 1` plus
//! `a - 1` disjoint edges, then moves `deg h` one step at a time with
//! suspensions that leave `im` and `reg` alone. Every step's Hilbert series
//! is recomputed and compared with the symbolic prediction, and the final
//! graph is re-measured from scratch.

mod provider;

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

pub use provider::BaseGraphProvider;

use crate::algebra::HilbertSeries;
use crate::complex::FieldSpec;
use crate::edge_ideal::InvariantReport;
use crate::edge_ideal::{hilbert_series, induced_matching_number, invariant_report, regularity};
use crate::graph::{k2, Graph, VertexSet};
use crate::suspension::{
    edge_s_suspension, predict_edge_s_suspension, predict_s_suspension, s_suspension,
    SuspensionKind, SuspensionStep,
};
use crate::{Error, Result};

/// Which degree adjustment a step belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Phase {
    Increase,
    Decrease,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Increase => "increase",
            Phase::Decrease => "decrease",
        }
    }
}

/// A suspension applied during a build, with the series predicted from the
/// previous graph and the series computed on the new one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateStep {
    pub phase: Phase,
    pub step: SuspensionStep,
    pub predicted: HilbertSeries,
    pub computed: HilbertSeries,
}

/// Record of one build: the base graphs, every suspension applied, and the
/// invariants of the result measured from scratch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// `(a, r, s)`.
    pub target: (usize, usize, usize),
    /// Parts whose disjoint union is the starting graph.
    pub base_parts: Vec<Graph>,
    pub base_provenance: Vec<alloc::string::String>,
    pub steps: Vec<CertificateStep>,
    pub result: Graph,
    pub report: InvariantReport,
    pub field: FieldSpec,
    pub seed: u64,
}

impl Certificate {
    pub fn base(&self) -> Result<Graph> {
        Graph::disjoint_union(&self.base_parts)
    }

    /// Re-applies the recorded steps to the base graphs.
    pub fn replay(&self) -> Result<Graph> {
        let mut g = self.base()?;
        for st in &self.steps {
            g = st.step.apply(&g)?;
        }
        Ok(g)
    }

    /// Replays the construction, recomputes every series and the final
    /// report, and compares everything with what was recorded.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: alloc::string::String| Err(Error::VerificationFailed(msg));
        let mut g = self.base()?;
        for (i, st) in self.steps.iter().enumerate() {
            let before = hilbert_series(&g);
            let size = st.step.s.len();
            let predicted = match st.step.kind {
                SuspensionKind::S => predict_s_suspension(&before, size)?,
                SuspensionKind::EdgeS => predict_edge_s_suspension(&before, size)?,
            };
            g = st.step.apply(&g)?;
            let computed = hilbert_series(&g);
            if predicted != st.predicted || computed != st.computed || computed != predicted {
                return fail(format!("step {i}: series mismatch"));
            }
        }
        if g != self.result {
            return fail("replayed graph differs from the recorded result".into());
        }
        let report = invariant_report(&g, self.field)?;
        if report != self.report {
            return fail(format!(
                "recomputed report {report} differs from {}",
                self.report
            ));
        }
        check_target(&report, self.target)
    }
}

fn check_target(report: &InvariantReport, (a, r, s): (usize, usize, usize)) -> Result<()> {
    if report.im != a || report.reg != r || report.s != s || !report.connected {
        return Err(Error::VerificationFailed(format!(
            "target (a, r, s) = ({a}, {r}, {s}) but the graph has im={} reg={} s={} connected={}",
            report.im, report.reg, report.s, report.connected
        )));
    }
    Ok(())
}

/// The star with centre 1 and leaves `2..=s+1`.
pub fn star_graph(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "star needs at least one leaf".into(),
        ));
    }
    let edges: Vec<_> = (2..=s + 1).map(|v| (1, v)).collect();
    Graph::from_edges(s + 1, &edges)
}

/// Base graph for the gap-free part: `reg = dim = r`, `im = 1`, connected.
pub fn base_gap_free(r: usize, provider: &mut BaseGraphProvider) -> Result<Graph> {
    provider.base(r)
}

struct Builder {
    g: Graph,
    series: HilbertSeries,
    steps: Vec<CertificateStep>,
}

impl Builder {
    fn new(g: Graph) -> Self {
        let series = hilbert_series(&g);
        Builder {
            g,
            series,
            steps: Vec::new(),
        }
    }

    fn degree(&self) -> usize {
        self.series.degree()
    }

    fn push(
        &mut self,
        phase: Phase,
        kind: SuspensionKind,
        s: VertexSet,
        edge: Option<(usize, usize)>,
    ) -> Result<()> {
        let (next, predicted) = match kind {
            SuspensionKind::S => (
                s_suspension(&self.g, s)?,
                predict_s_suspension(&self.series, s.len())?,
            ),
            SuspensionKind::EdgeS => {
                let e = edge.expect("edge steps carry an edge");
                (
                    edge_s_suspension(&self.g, e, s)?,
                    predict_edge_s_suspension(&self.series, s.len())?,
                )
            }
        };
        let computed = hilbert_series(&next);
        if computed != predicted {
            return Err(Error::VerificationFailed(format!(
                "{} step on {:?} with S={s}: predicted {predicted}, computed {computed}",
                kind.as_str(),
                self.g
            )));
        }
        let step = SuspensionStep {
            kind,
            s,
            edge,
            new_vertex: self.g.n() + 1,
        };
        self.steps.push(CertificateStep {
            phase,
            step,
            predicted,
            computed: computed.clone(),
        });
        self.g = next;
        self.series = computed;
        Ok(())
    }

    /// One S-suspension over the lexicographically least maximum
    /// independent set: `deg h` and `dim` both go up by one.
    fn increase(&mut self) -> Result<()> {
        if let Some(v) = self.g.isolated_vertices().min_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        let (s0, d0) = (self.degree(), self.series.dpow());
        let s = self
            .g
            .first_independent_set(d0)
            .expect("a maximum independent set exists");
        self.push(Phase::Increase, SuspensionKind::S, s, None)?;
        if self.degree() != s0 + 1 || self.series.dpow() != d0 + 1 {
            return Err(Error::VerificationFailed(format!(
                "increase step moved (deg h, dim) from ({s0}, {d0}) to ({}, {})",
                self.degree(),
                self.series.dpow()
            )));
        }
        Ok(())
    }

    /// Lowers `deg h` (usually by exactly one) keeping `dim`, `im` and `reg`.
    fn decrease(&mut self, reg: usize) -> Result<()> {
        if let Some(v) = self.g.isolated_vertices().min_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        if reg < 2 {
            return Err(Error::RegularityTooSmall(reg));
        }
        let s = self.degree();
        if s < 2 {
            return Err(Error::DegreeTooSmall(s));
        }
        let d = self.series.dpow();
        while self.degree() == s {
            let hs = self.series.numerator().coeff(s);
            // an S-suspension with |S| = d - s adds (-1)^(s-1) to h_s, an
            // edge suspension with the same S adds (-1)^s
            let s_move_helps = (hs.is_positive() && s.is_multiple_of(2))
                || (hs.is_negative() && !s.is_multiple_of(2));
            if s_move_helps {
                let set = self
                    .g
                    .first_independent_set(d - s)
                    .expect("independent sets of size below dim exist");
                self.push(Phase::Decrease, SuspensionKind::S, set, None)?;
            } else {
                self.edge_round(s, d, &hs)?;
            }
            if self.series.dpow() != d {
                return Err(Error::VerificationFailed(format!(
                    "decrease step changed dim from {d} to {}",
                    self.series.dpow()
                )));
            }
        }
        Ok(())
    }

    /// One S-suspension followed by `m` edge suspensions through the new
    /// vertex, net change `(-1)^s (m - 1)` to `h_s`.
    fn edge_round(&mut self, s: usize, d: usize, hs: &BigInt) -> Result<()> {
        let mag = u64::try_from(hs.magnitude()).unwrap_or(u64::MAX);
        let m = mag.saturating_add(1).min(s as u64) as usize;
        let t = self
            .g
            .first_independent_set(d - s + m)
            .expect("s <= dim, so an independent set of size d - s + m exists");
        let members = t.to_vec();
        let (keep, top) = members.split_at(members.len() - m);
        let base_s: VertexSet = keep.iter().copied().collect();
        self.push(Phase::Decrease, SuspensionKind::S, base_s, None)?;
        let w = self.g.n();
        for &x in top {
            self.push(Phase::Decrease, SuspensionKind::EdgeS, base_s, Some((x, w)))?;
        }
        Ok(())
    }
}

fn check_step_invariants(
    before: (usize, usize),
    g: &Graph,
    field: FieldSpec,
    what: &str,
) -> Result<()> {
    let after = (induced_matching_number(g), regularity(g, field));
    if after != before {
        return Err(Error::VerificationFailed(format!(
            "{what} changed (im, reg) from {before:?} to {after:?}"
        )));
    }
    Ok(())
}

/// `G^S` for the lexicographically least maximum independent set `S`:
/// `deg h` and `dim` rise by one, `im` and `reg` stay, the result is
/// connected.
pub fn increase_deg_step(g: &Graph, field: FieldSpec) -> Result<Graph> {
    let before = (induced_matching_number(g), regularity(g, field));
    let mut b = Builder::new(g.clone());
    b.increase()?;
    check_step_invariants(before, &b.g, field, "increase step")?;
    if !b.g.is_connected() {
        return Err(Error::VerificationFailed(
            "increase step left the graph disconnected".into(),
        ));
    }
    Ok(b.g)
}

/// Lowers `deg h` keeping `im`, `reg` and `dim`. Needs `reg >= 2` and
/// `deg h >= 2`.
pub fn decrease_deg_step(g: &Graph, field: FieldSpec) -> Result<Graph> {
    let before = (induced_matching_number(g), regularity(g, field));
    let mut b = Builder::new(g.clone());
    b.decrease(before.1)?;
    check_step_invariants(before, &b.g, field, "decrease step")?;
    Ok(b.g)
}

/// Builds a connected graph with `im = a`, `reg = r` and `deg h = s`.
pub fn build(
    a: usize,
    r: usize,
    s: usize,
    provider: &mut BaseGraphProvider,
    field: FieldSpec,
) -> Result<Certificate> {
    if a == 0 || a > r || s == 0 {
        return Err(Error::InvalidTriple(a, r, s));
    }
    let (parts, provenance) = if a == 1 && r == 1 {
        (
            alloc::vec![star_graph(s)?],
            alloc::vec!["star K_{1,s}".into()],
        )
    } else {
        let base = base_gap_free(r - a + 1, provider)?;
        let mut parts = alloc::vec![base];
        let mut notes = alloc::vec![provider.provenance(r - a + 1).unwrap_or("provider").into()];
        for _ in 1..a {
            parts.push(k2());
            notes.push("built-in: K2".into());
        }
        (parts, notes)
    };
    let mut b = Builder::new(Graph::disjoint_union(&parts)?);
    loop {
        let deg = b.degree();
        if deg < s {
            b.increase()?;
        } else if deg > s {
            b.decrease(r)?;
        } else if !b.g.is_connected() {
            b.increase()?;
        } else {
            break;
        }
    }
    let report = invariant_report(&b.g, field)?;
    check_target(&report, (a, r, s))?;
    Ok(Certificate {
        target: (a, r, s),
        base_parts: parts,
        base_provenance: provenance,
        steps: b.steps,
        result: b.g,
        report,
        field,
        seed: provider.seed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntegerPolynomial;
    use crate::graph::cycle;
    use std::vec;

    fn h(g: &Graph) -> Vec<i64> {
        hilbert_series(g)
            .numerator()
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn stars() {
        assert_eq!(star_graph(1).unwrap(), k2());
        assert_eq!(h(&star_graph(2).unwrap()), vec![1, 1, -1]);
        assert_eq!(h(&star_graph(3).unwrap()), vec![1, 1, -2, 1]);
        assert!(star_graph(0).is_err());
    }

    #[test]
    fn single_steps() {
        let q = FieldSpec::Rationals;
        let g = increase_deg_step(&k2(), q).unwrap();
        assert_eq!(h(&g), vec![1, 1, -1]);
        let g = increase_deg_step(&cycle(5).unwrap(), q).unwrap();
        assert_eq!(hilbert_series(&g).degree(), 3);
        let two = Graph::disjoint_union(&[k2(), k2()]).unwrap();
        let g = increase_deg_step(&two, q).unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.is_connected());
        assert_eq!(hilbert_series(&g).degree(), 3);

        let g = decrease_deg_step(&cycle(5).unwrap(), q).unwrap();
        assert_eq!(
            g,
            s_suspension(&cycle(5).unwrap(), VertexSet::EMPTY).unwrap()
        );
        assert_eq!(h(&g), vec![1, 4]);
        assert_eq!(
            decrease_deg_step(&k2(), q),
            Err(Error::RegularityTooSmall(1))
        );
    }

    #[test]
    fn octagon_decrease_follows_the_worked_chain() {
        let g = decrease_deg_step(&cycle(8).unwrap(), FieldSpec::Rationals).unwrap();
        assert_eq!(g.n(), 11);
        assert_eq!(
            g.neighbors(10).difference(VertexSet::from_iter([11])),
            VertexSet::from_iter(2..=8)
        );
        assert_eq!(
            g.neighbors(11).difference(VertexSet::from_iter([10])),
            VertexSet::from_iter([1, 2, 4, 5, 6, 7, 8])
        );
        assert_eq!(
            hilbert_series(&g),
            HilbertSeries::new(IntegerPolynomial::from_i64s(&[1, 7, -3, -3]), 4)
        );
    }

    #[test]
    fn small_builds() {
        let q = FieldSpec::Rationals;
        let mut p = BaseGraphProvider::new(q);
        let c = build(1, 2, 1, &mut p, q).unwrap();
        assert_eq!(
            c.result,
            s_suspension(&cycle(5).unwrap(), VertexSet::EMPTY).unwrap()
        );
        assert_eq!(c.report.h, IntegerPolynomial::from_i64s(&[1, 4]));
        let c = build(1, 1, 3, &mut p, q).unwrap();
        assert_eq!(c.result, star_graph(3).unwrap());
        let c = build(2, 2, 2, &mut p, q).unwrap();
        assert_eq!((c.report.im, c.report.reg, c.report.s), (2, 2, 2));
        assert!(c.report.connected);
        assert_eq!(c.replay().unwrap(), c.result);
        c.verify().unwrap();
        assert_eq!(
            build(2, 1, 1, &mut p, q),
            Err(Error::InvalidTriple(2, 1, 1))
        );
        assert_eq!(build(1, 3, 1, &mut p, q), Err(Error::BaseUnavailable(3)));
    }
}
