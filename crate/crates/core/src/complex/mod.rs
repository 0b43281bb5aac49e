//! Finite simplicial complexes with materialized face lists, and their
//! reduced homology over `Q` or `F_p`.

mod field;
mod homology;
pub(crate) mod linalg;

use alloc::vec::Vec;
use core::cmp::Ordering;

use hashbrown::HashSet;

pub use field::FieldSpec;
pub(crate) use homology::homology_rank_between;
pub use homology::{reduced_homology_ranks, reduced_homology_ranks_smith};

use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::{Error, Result};

/// Face-count limit used by [`SimplicialComplex::independence_complex`].
pub const DEFAULT_FACE_BOUND: usize = 1 << 24;

/// `f[i]` is the number of faces with `i` vertices, so `f[0] = 1` counts the
/// empty face of a nonvoid complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// `sum_i (-1)^(i-1) f[i]`, i.e. the reduced Euler characteristic.
    pub fn reduced_euler_characteristic(&self) -> i128 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { c as i128 } else { -(c as i128) })
            .sum()
    }
}

/// A downward-closed family of subsets of `{1, ..., ground}`.
///
/// Faces are kept sorted by cardinality and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: usize,
    faces: Vec<u64>,
}

pub(crate) fn face_order(a: &u64, b: &u64) -> Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| VertexSet::from_bits(*a).lex_cmp(VertexSet::from_bits(*b)))
}

impl SimplicialComplex {
    /// The complex with no faces at all (not even the empty one).
    pub fn void(ground: usize) -> Result<Self> {
        check_ground(ground)?;
        Ok(SimplicialComplex {
            ground,
            faces: Vec::new(),
        })
    }

    /// Builds a complex from its full face list. Duplicates are ignored; a
    /// family that is not closed under subsets is rejected.
    pub fn from_faces(ground: usize, faces: &[VertexSet]) -> Result<Self> {
        check_ground(ground)?;
        let full = VertexSet::full(ground);
        let mut set: HashSet<u64> = HashSet::with_capacity(faces.len());
        for f in faces {
            if let Some(v) = f.difference(full).min_vertex() {
                return Err(Error::InvalidVertex(v, ground));
            }
            set.insert(f.bits());
        }
        for &f in &set {
            let mut it = f;
            while it != 0 {
                let low = it & it.wrapping_neg();
                it &= it - 1;
                if !set.contains(&(f & !low)) {
                    return Err(Error::NotDownwardClosed);
                }
            }
        }
        if !set.is_empty() && !set.contains(&0) {
            return Err(Error::NotDownwardClosed);
        }
        let mut faces: Vec<u64> = set.into_iter().collect();
        faces.sort_by(face_order);
        Ok(SimplicialComplex { ground, faces })
    }

    /// The complex generated by `facets` (all their subsets). An empty facet
    /// list gives the void complex.
    pub fn from_facets(ground: usize, facets: &[VertexSet]) -> Result<Self> {
        check_ground(ground)?;
        let full = VertexSet::full(ground);
        let mut set: HashSet<u64> = HashSet::new();
        for f in facets {
            if let Some(v) = f.difference(full).min_vertex() {
                return Err(Error::InvalidVertex(v, ground));
            }
            if f.len() > 24 {
                return Err(Error::CapacityExceeded {
                    what: "facet size",
                    got: f.len(),
                    limit: 24,
                });
            }
            // walk all submasks of f
            let m = f.bits();
            let mut sub = m;
            loop {
                set.insert(sub);
                if set.len() > DEFAULT_FACE_BOUND {
                    return Err(Error::CapacityExceeded {
                        what: "face count",
                        got: set.len(),
                        limit: DEFAULT_FACE_BOUND,
                    });
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
        let mut faces: Vec<u64> = set.into_iter().collect();
        faces.sort_by(face_order);
        Ok(SimplicialComplex { ground, faces })
    }

    /// Complex of independent sets of `g`, with at most
    /// [`DEFAULT_FACE_BOUND`] faces.
    pub fn independence_complex(g: &Graph) -> Result<Self> {
        Self::independence_complex_bounded(g, DEFAULT_FACE_BOUND)
    }

    pub fn independence_complex_bounded(g: &Graph, max_faces: usize) -> Result<Self> {
        let counts = g.independent_set_counts();
        let total: u64 = counts.iter().sum();
        if total > max_faces as u64 {
            return Err(Error::CapacityExceeded {
                what: "face count",
                got: usize::try_from(total).unwrap_or(usize::MAX),
                limit: max_faces,
            });
        }
        let mut faces = Vec::with_capacity(total as usize);
        for k in 0..counts.len() {
            faces.extend(g.independent_sets(k).map(VertexSet::bits));
        }
        Ok(SimplicialComplex {
            ground: g.n(),
            faces,
        })
    }

    pub(crate) fn from_sorted_faces(ground: usize, faces: Vec<u64>) -> Self {
        debug_assert!(faces
            .windows(2)
            .all(|w| face_order(&w[0], &w[1]) == Ordering::Less));
        SimplicialComplex { ground, faces }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> impl ExactSizeIterator<Item = VertexSet> + '_ {
        self.faces.iter().map(|&f| VertexSet::from_bits(f))
    }

    pub(crate) fn face_bits(&self) -> &[u64] {
        &self.faces
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces
            .binary_search_by(|f| face_order(f, &face.bits()))
            .is_ok()
    }

    /// Union of all faces.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_bits(self.faces.iter().fold(0, |a, f| a | f))
    }

    /// `max |F| - 1`, or `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.faces.last().map(|f| f.count_ones() as isize - 1)
    }

    pub fn f_vector(&self) -> FVector {
        let mut f = Vec::new();
        for &face in &self.faces {
            let c = face.count_ones() as usize;
            if f.len() <= c {
                f.resize(c + 1, 0);
            }
            f[c] += 1;
        }
        FVector(f)
    }

    /// Faces contained in `w`; the ground set is unchanged.
    pub fn restrict(&self, w: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            ground: self.ground,
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|&f| f & !w.bits() == 0)
                .collect(),
        }
    }

    /// Maximal faces, in face order.
    pub fn facets(&self) -> Vec<VertexSet> {
        let set: HashSet<u64> = self.faces.iter().copied().collect();
        let verts = self.vertex_set().bits();
        self.faces
            .iter()
            .copied()
            .filter(|&f| {
                let mut out = verts & !f;
                while out != 0 {
                    let low = out & out.wrapping_neg();
                    out &= out - 1;
                    if set.contains(&(f | low)) {
                        return false;
                    }
                }
                true
            })
            .map(VertexSet::from_bits)
            .collect()
    }

    /// Some vertex of the complex lies in every facet. The void complex and
    /// `{∅}` are not cones.
    pub fn is_cone(&self) -> bool {
        let facets = self.facets();
        if facets.is_empty() {
            return false;
        }
        let common = facets.iter().fold(u64::MAX, |a, f| a & f.bits());
        common != 0
    }
}

impl core::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("ground", &self.ground)
            .field("facets", &self.facets())
            .finish()
    }
}

fn check_ground(ground: usize) -> Result<()> {
    if ground > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "ground set",
            got: ground,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}
