use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::{rank_mod_p, rank_rational, smith_invariants, SparseColumn};
use super::{FieldSpec, SimplicialComplex};
use crate::{Error, Result};

/// Boundary of each face in `cols` expressed in the basis `rows`, with the
/// sign `(-1)^k` for deleting the `k`-th smallest vertex.
fn boundary_columns(cols: &[u64], rows: &[u64]) -> Vec<SparseColumn> {
    let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    cols.iter()
        .map(|&face| {
            let mut col = Vec::with_capacity(face.count_ones() as usize);
            let mut it = face;
            let mut k = 0;
            while it != 0 {
                let low = it & it.wrapping_neg();
                it &= it - 1;
                let row = index[&(face & !low)];
                col.push((row, if k % 2 == 0 { 1 } else { -1 }));
                k += 1;
            }
            col
        })
        .collect()
}

fn boundary_rank(cols: &[u64], rows: &[u64], field: FieldSpec) -> usize {
    if cols.is_empty() || rows.is_empty() {
        return 0;
    }
    let m = boundary_columns(cols, rows);
    match field {
        FieldSpec::Rationals => rank_rational(&m),
        FieldSpec::Prime(p) => rank_mod_p(&m, p),
    }
}

/// Rank of reduced homology carried by the faces `mid` (all of one
/// cardinality `c`), given every face of cardinality `c - 1` in `lower` and
/// every face of cardinality `c + 1` in `upper`.
pub(crate) fn homology_rank_between(
    lower: &[u64],
    mid: &[u64],
    upper: &[u64],
    field: FieldSpec,
) -> usize {
    if mid.is_empty() {
        return 0;
    }
    mid.len() - boundary_rank(mid, lower, field) - boundary_rank(upper, mid, field)
}

fn blocks(k: &SimplicialComplex) -> Result<Vec<&[u64]>> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces = k.face_bits();
    let mut out = Vec::new();
    let mut start = 0;
    while start < faces.len() {
        let c = faces[start].count_ones();
        let end = start + faces[start..].partition_point(|f| f.count_ones() == c);
        out.push(&faces[start..end]);
        start = end;
    }
    Ok(out)
}

/// Ranks of reduced homology; entry `i` is the rank in dimension `i - 1`,
/// for dimensions `-1 ..= dim K`.
pub fn reduced_homology_ranks(k: &SimplicialComplex, field: FieldSpec) -> Result<Vec<usize>> {
    let b = blocks(k)?;
    let empty: &[u64] = &[];
    Ok((0..b.len())
        .map(|c| {
            let lower = if c == 0 { empty } else { b[c - 1] };
            let upper = b.get(c + 1).copied().unwrap_or(empty);
            homology_rank_between(lower, b[c], upper, field)
        })
        .collect())
}

/// Same as [`reduced_homology_ranks`], computed from integer Smith normal
/// forms instead of elimination. Over `F_p` a boundary map's rank is the
/// number of invariant factors not divisible by `p`.
pub fn reduced_homology_ranks_smith(k: &SimplicialComplex, field: FieldSpec) -> Result<Vec<usize>> {
    let b = blocks(k)?;
    let ranks: Vec<usize> = (0..=b.len())
        .map(|c| {
            if c == 0 || c == b.len() {
                0
            } else {
                let inv = smith_invariants(b[c - 1].len(), &boundary_columns(b[c], b[c - 1]));
                match field {
                    FieldSpec::Rationals => inv.len(),
                    FieldSpec::Prime(p) => {
                        let p = BigInt::from(p);
                        inv.iter().filter(|d| !(*d % &p).is_zero()).count()
                    }
                }
            }
        })
        .collect();
    Ok((0..b.len())
        .map(|c| b[c].len() - ranks[c] - ranks[c + 1])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, k2, Graph, VertexSet};
    use std::vec;

    fn ind(g: &Graph) -> SimplicialComplex {
        SimplicialComplex::independence_complex(g).unwrap()
    }

    #[test]
    fn small_spaces() {
        assert_eq!(
            reduced_homology_ranks(&ind(&k2()), FieldSpec::Rationals).unwrap(),
            vec![0, 1]
        );
        let c5 = ind(&cycle(5).unwrap());
        assert_eq!(
            reduced_homology_ranks(&c5, FieldSpec::Rationals).unwrap(),
            vec![0, 0, 1]
        );
        assert_eq!(
            reduced_homology_ranks_smith(&c5, FieldSpec::Rationals).unwrap(),
            vec![0, 0, 1]
        );
        let simplex =
            SimplicialComplex::from_facets(3, &[VertexSet::from_iter([1, 2, 3])]).unwrap();
        assert_eq!(
            reduced_homology_ranks(&simplex, FieldSpec::Rationals).unwrap(),
            vec![0, 0, 0, 0]
        );
        let point = SimplicialComplex::from_faces(0, &[VertexSet::EMPTY]).unwrap();
        assert_eq!(
            reduced_homology_ranks(&point, FieldSpec::Prime(2)).unwrap(),
            vec![1]
        );
        assert_eq!(
            reduced_homology_ranks(&SimplicialComplex::void(2).unwrap(), FieldSpec::Rationals),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let tri: [[usize; 3]; 10] = [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [3, 4, 6],
            [2, 4, 5],
            [3, 5, 6],
            [2, 4, 6],
        ];
        let facets: Vec<VertexSet> = tri
            .iter()
            .map(|t| VertexSet::from_iter(t.iter().copied()))
            .collect();
        let k = SimplicialComplex::from_facets(6, &facets).unwrap();
        assert_eq!(k.f_vector().as_slice(), &[1, 6, 15, 10]);
        assert_eq!(
            reduced_homology_ranks(&k, FieldSpec::Rationals).unwrap(),
            vec![0, 0, 0, 0]
        );
        assert_eq!(
            reduced_homology_ranks_smith(&k, FieldSpec::Rationals).unwrap(),
            vec![0, 0, 0, 0]
        );
        assert_eq!(
            reduced_homology_ranks(&k, FieldSpec::Prime(2)).unwrap(),
            vec![0, 0, 1, 1]
        );
        assert_eq!(
            reduced_homology_ranks_smith(&k, FieldSpec::Prime(2)).unwrap(),
            vec![0, 0, 1, 1]
        );
        assert_eq!(
            reduced_homology_ranks_smith(&k, FieldSpec::Prime(3)).unwrap(),
            vec![0, 0, 0, 0]
        );
    }
}
