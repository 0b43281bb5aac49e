//! Edge ideals and the graph invariants attached to them: matching number,
//! induced matching number, regularity, dimension and h-polynomial.

mod matching;
mod regularity;

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{HilbertSeries, IntegerPolynomial, SquarefreeMonomialIdeal};
use crate::complex::FieldSpec;
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// `I(G) = (x_i x_j : {i, j} ∈ E(G))`.
pub fn edge_ideal(g: &Graph) -> Result<SquarefreeMonomialIdeal> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let gens: Vec<VertexSet> = g
        .edges()
        .into_iter()
        .map(|(u, v)| VertexSet::from_iter([u, v]))
        .collect();
    SquarefreeMonomialIdeal::new(g.n(), &gens)
}

fn to_pairs(bits: Vec<(u32, u32)>) -> Vec<(usize, usize)> {
    bits.into_iter()
        .map(|(u, v)| (u as usize + 1, v as usize + 1))
        .collect()
}

/// A maximum matching, edges in canonical order.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    to_pairs(matching::maximum_matching(
        g.adj_bits(),
        g.vertices().bits(),
    ))
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// A maximum induced matching, edges in canonical order.
pub fn maximum_induced_matching(g: &Graph) -> Vec<(usize, usize)> {
    to_pairs(matching::maximum_induced_matching(
        g.adj_bits(),
        g.vertices().bits(),
    ))
}

pub fn induced_matching_number(g: &Graph) -> usize {
    maximum_induced_matching(g).len()
}

/// `im(G) = 1`.
pub fn is_gap_free(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(induced_matching_number(g) == 1)
}

/// Hilbert series of `R/I(G)`, from the independence polynomial.
pub fn hilbert_series(g: &Graph) -> HilbertSeries {
    HilbertSeries::from_f_vector(&g.independent_set_counts())
        .expect("the empty set is always independent")
}

/// `reg(R/I(G))`; isolated vertices are ignored and an edgeless graph gives 0.
pub fn regularity(g: &Graph, field: FieldSpec) -> usize {
    regularity::regularity_with_witness(g, field).0
}

/// `reg(R/I(G))` together with a vertex set `W` for which
/// `H̃_{reg-1}(Ind(G_W)) ≠ 0`.
pub fn regularity_with_witness(g: &Graph, field: FieldSpec) -> (usize, VertexSet) {
    regularity::regularity_with_witness(g, field)
}

/// All invariants of one graph over one field.
#[derive(Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub connected: bool,
    pub im: usize,
    pub m: usize,
    pub reg: usize,
    pub dim: usize,
    pub h: IntegerPolynomial,
    pub s: usize,
    pub field: FieldSpec,
}

impl InvariantReport {
    pub fn series(&self) -> HilbertSeries {
        HilbertSeries::new(self.h.clone(), self.dim)
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "im={} m={} reg={} dim={} h=[",
            self.im, self.m, self.reg, self.dim
        )?;
        for (i, c) in self.h.coeffs().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] s={}", self.s)
    }
}

impl fmt::Debug for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "InvariantReport(n={}, connected={}, {}, field={})",
            self.n, self.connected, self, self.field
        )
    }
}

/// Computes every invariant of `g` and checks `im <= reg <= m`.
pub fn invariant_report(g: &Graph, field: FieldSpec) -> Result<InvariantReport> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if let Some(v) = g.isolated_vertices().min_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let series = hilbert_series(g);
    let (h, s) = series.h_polynomial();
    let report = InvariantReport {
        n: g.n(),
        connected: g.is_connected(),
        im: induced_matching_number(g),
        m: matching_number(g),
        reg: regularity(g, field),
        dim: series.dpow(),
        h: h.clone(),
        s,
        field,
    };
    debug_assert_eq!(report.dim, g.independence_number());
    debug_assert!(report.s <= report.dim);
    debug_assert!(report.h.coeff(0) == 1.into());
    if !(report.im <= report.reg && report.reg <= report.m) {
        return Err(Error::SandwichViolation {
            im: report.im,
            reg: report.reg,
            m: report.m,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, k2};
    use std::format;

    #[test]
    fn reports() {
        let q = FieldSpec::Rationals;
        let r = invariant_report(&cycle(5).unwrap(), q).unwrap();
        assert_eq!(format!("{r}"), "im=1 m=2 reg=2 dim=2 h=[1,3,1] s=2");
        assert!(r.connected);
        let r = invariant_report(&cycle(8).unwrap(), q).unwrap();
        assert_eq!(format!("{r}"), "im=2 m=4 reg=3 dim=4 h=[1,4,2,-4,-1] s=4");
        let two = Graph::disjoint_union(&[k2(), k2()]).unwrap();
        let r = invariant_report(&two, q).unwrap();
        assert_eq!(format!("{r}"), "im=2 m=2 reg=2 dim=2 h=[1,2,1] s=2");
        assert!(!r.connected);
        assert_eq!(
            invariant_report(&Graph::empty(3).unwrap(), q),
            Err(Error::NoEdges)
        );
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(invariant_report(&g, q), Err(Error::IsolatedVertex(3)));
    }

    #[test]
    fn ideals_and_gaps() {
        assert_eq!(
            edge_ideal(&cycle(5).unwrap()).unwrap().generators().len(),
            5
        );
        assert_eq!(edge_ideal(&Graph::empty(2).unwrap()), Err(Error::NoEdges));
        assert_eq!(is_gap_free(&cycle(5).unwrap()), Ok(true));
        assert_eq!(is_gap_free(&cycle(8).unwrap()), Ok(false));
        assert_eq!(
            is_gap_free(&Graph::disjoint_union(&[k2(), k2()]).unwrap()),
            Ok(false)
        );
    }
}
