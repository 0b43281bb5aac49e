//! One-vertex extensions of a graph: the S-suspension (new vertex joined to
//! everything outside an independent set `S`) and the edge variant (joined to
//! everything outside `S` and one edge), with their exact effect on the
//! Hilbert series.

use alloc::format;
use alloc::string::ToString;

use crate::algebra::{HilbertSeries, IntegerPolynomial};
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuspensionKind {
    S,
    EdgeS,
}

impl SuspensionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SuspensionKind::S => "S",
            SuspensionKind::EdgeS => "edgeS",
        }
    }
}

/// One recorded suspension. The new vertex is always `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuspensionStep {
    pub kind: SuspensionKind,
    pub s: VertexSet,
    /// Present exactly for [`SuspensionKind::EdgeS`], as `(u, v)` with `u < v`.
    pub edge: Option<(usize, usize)>,
    pub new_vertex: usize,
}

impl SuspensionStep {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        if self.new_vertex != g.n() + 1 {
            return Err(Error::InvalidParameter(format!(
                "step adds vertex {} to a graph on {} vertices",
                self.new_vertex,
                g.n()
            )));
        }
        match (self.kind, self.edge) {
            (SuspensionKind::S, None) => s_suspension(g, self.s),
            (SuspensionKind::EdgeS, Some(e)) => edge_s_suspension(g, e, self.s),
            _ => Err(Error::InvalidParameter(
                "edge must be given exactly for edgeS steps".into(),
            )),
        }
    }
}

fn require_independent(g: &Graph, s: VertexSet) -> Result<()> {
    if g.is_independent(s)? {
        Ok(())
    } else {
        Err(Error::NotIndependent(s.to_string()))
    }
}

/// `G^S`: adds vertex `n + 1` adjacent to every vertex outside `S`.
pub fn s_suspension(g: &Graph, s: VertexSet) -> Result<Graph> {
    if let Some(v) = g.isolated_vertices().min_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    require_independent(g, s)?;
    g.with_new_vertex(g.vertices().difference(s))
}

/// Validates an `(e, S)` pair and returns `S ∪ e`.
fn edge_s_core(g: &Graph, e: (usize, usize), s: VertexSet) -> Result<VertexSet> {
    let (a, b) = e;
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge(a, b));
    }
    require_independent(g, s)?;
    let ends = VertexSet::from_iter([a, b]);
    let touching = s.intersection(g.neighbors(a).union(g.neighbors(b)).union(ends));
    if let Some(x) = touching.min_vertex() {
        return Err(Error::AdjacencyViolation(x));
    }
    Ok(s.union(ends))
}

/// `G^{e,S}`: adds vertex `n + 1` adjacent to every vertex outside `S ∪ e`.
pub fn edge_s_suspension(g: &Graph, e: (usize, usize), s: VertexSet) -> Result<Graph> {
    let core = edge_s_core(g, e, s)?;
    g.with_new_vertex(g.vertices().difference(core))
}

/// Whether every vertex outside `S ∪ e` has a neighbour in `S ∪ e`.
pub fn check_domination_hypothesis(g: &Graph, e: (usize, usize), s: VertexSet) -> Result<bool> {
    let core = edge_s_core(g, e, s)?;
    Ok(g.vertices()
        .difference(core)
        .iter()
        .all(|x| !g.neighbors(x).intersection(core).is_empty()))
}

fn check_size(h: &HilbertSeries, size_s: usize) -> Result<()> {
    if size_s > h.dpow() {
        return Err(Error::SizeOutOfRange {
            size: size_s,
            dpow: h.dpow(),
        });
    }
    Ok(())
}

/// `H + λ / (1 - λ)^{|S| + 1}`.
pub fn predict_s_suspension(h: &HilbertSeries, size_s: usize) -> Result<HilbertSeries> {
    check_size(h, size_s)?;
    let extra = HilbertSeries::new(IntegerPolynomial::monomial(1, 1), size_s + 1);
    let out = h.add(&extra);
    let d = h.dpow();
    let num = h.numerator();
    let closed = if size_s < d {
        HilbertSeries::new(
            num + &IntegerPolynomial::monomial(1, 1).mul_one_minus_lambda_pow(d - size_s - 1),
            d,
        )
    } else {
        HilbertSeries::new(
            &num.mul_one_minus_lambda_pow(1) + &IntegerPolynomial::monomial(1, 1),
            d + 1,
        )
    };
    assert_eq!(out, closed, "S-suspension case formula");
    Ok(out)
}

/// `H + λ(1 + λ) / (1 - λ)^{|S| + 2}`.
pub fn predict_edge_s_suspension(h: &HilbertSeries, size_s: usize) -> Result<HilbertSeries> {
    check_size(h, size_s)?;
    let bump = IntegerPolynomial::from_i64s(&[0, 1, 1]);
    let out = h.add(&HilbertSeries::new(bump.clone(), size_s + 2));
    let d = h.dpow();
    let num = h.numerator();
    let closed = if size_s + 2 <= d {
        HilbertSeries::new(num + &bump.mul_one_minus_lambda_pow(d - size_s - 2), d)
    } else {
        HilbertSeries::new(
            &num.mul_one_minus_lambda_pow(size_s + 2 - d) + &bump,
            size_s + 2,
        )
    };
    assert_eq!(out, closed, "edge S-suspension case formula");
    Ok(out)
}
