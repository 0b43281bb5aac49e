use alloc::vec::Vec;
use core::fmt;

use crate::complex::{face_order, SimplicialComplex, DEFAULT_FACE_BOUND};
use crate::graph::{VertexSet, MAX_VERTICES};
use crate::{Error, Result};

/// Ideal of `K[x_1..x_ambient]` generated by squarefree monomials, stored
/// as the supports of its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomialIdeal {
    ambient: usize,
    generators: Vec<u64>,
}

fn minimalize(mut gens: Vec<u64>) -> Vec<u64> {
    gens.sort_by(face_order);
    gens.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|&h| h & !g == 0) {
            kept.push(g);
        }
    }
    kept
}

impl SquarefreeMonomialIdeal {
    /// Minimalizes `generators` to an antichain. An empty list is the zero
    /// ideal; an empty generator would make the ideal the whole ring and is
    /// rejected.
    pub fn new(ambient: usize, generators: &[VertexSet]) -> Result<Self> {
        if ambient > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "variable count",
                got: ambient,
                limit: MAX_VERTICES,
            });
        }
        let full = VertexSet::full(ambient);
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if let Some(v) = g.difference(full).min_vertex() {
                return Err(Error::InvalidVertex(v, ambient));
            }
            if g.is_empty() {
                return Err(Error::IdealImproper);
            }
            gens.push(g.bits());
        }
        Ok(SquarefreeMonomialIdeal {
            ambient,
            generators: minimalize(gens),
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> Vec<VertexSet> {
        self.generators
            .iter()
            .map(|&g| VertexSet::from_bits(g))
            .collect()
    }

    pub(crate) fn generator_bits(&self) -> &[u64] {
        &self.generators
    }

    /// Whether the squarefree monomial with support `face` avoids the ideal.
    pub fn is_face(&self, face: VertexSet) -> bool {
        self.generators.iter().all(|&g| g & !face.bits() != 0)
    }

    /// Complex of all subsets of `{1..ambient}` containing no generator.
    pub fn stanley_reisner_complex(&self) -> Result<SimplicialComplex> {
        // grow faces by appending vertices larger than their maximum; each
        // layer is then already in lexicographic order
        let mut faces = alloc::vec![0u64];
        let mut layer = alloc::vec![0u64];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &f in &layer {
                let start = if f == 0 {
                    0
                } else {
                    64 - f.leading_zeros() as usize
                };
                for v in start..self.ambient {
                    let g = f | 1 << v;
                    if self.is_face(VertexSet::from_bits(g)) {
                        next.push(g);
                    }
                }
            }
            faces.extend_from_slice(&next);
            if faces.len() > DEFAULT_FACE_BOUND {
                return Err(Error::CapacityExceeded {
                    what: "face count",
                    got: faces.len(),
                    limit: DEFAULT_FACE_BOUND,
                });
            }
            layer = next;
        }
        Ok(SimplicialComplex::from_sorted_faces(self.ambient, faces))
    }

    fn check_variable(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.ambient {
            return Err(Error::InvalidVertex(v, self.ambient));
        }
        Ok(())
    }

    /// `I : (x_v)`.
    pub fn colon_by_variable(&self, v: usize) -> Result<Self> {
        self.check_variable(v)?;
        let b = 1u64 << (v - 1);
        if self.generators.iter().all(|&g| g & b == 0) {
            return Err(Error::VariableAbsent(v));
        }
        let gens: Vec<u64> = self.generators.iter().map(|&g| g & !b).collect();
        if gens.contains(&0) {
            return Err(Error::IdealImproper);
        }
        Ok(SquarefreeMonomialIdeal {
            ambient: self.ambient,
            generators: minimalize(gens),
        })
    }

    /// `I + (x_v)`.
    pub fn add_variable(&self, v: usize) -> Result<Self> {
        self.check_variable(v)?;
        let mut gens = self.generators.clone();
        gens.push(1 << (v - 1));
        Ok(SquarefreeMonomialIdeal {
            ambient: self.ambient,
            generators: minimalize(gens),
        })
    }
}

impl fmt::Debug for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(ambient={}, gens=", self.ambient)?;
        f.debug_list().entries(self.generators()).finish()?;
        f.write_str(")")
    }
}
