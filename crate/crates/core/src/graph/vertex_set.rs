use core::cmp::Ordering;
use core::fmt;

use alloc::vec::Vec;

use super::MAX_VERTICES;
use crate::{Error, Result};

/// A subset of `{1, ..., 62}` stored as one machine word.
///
/// Vertex `v` lives in bit `v - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1 << (v - 1))
    }

    pub fn try_from_vertices(vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if !(1..=MAX_VERTICES).contains(&v) {
                return Err(Error::InvalidVertex(v, MAX_VERTICES));
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        *self = self.union(VertexSet::singleton(v));
    }

    pub fn remove(&mut self, v: usize) {
        if self.contains(v) {
            self.0 &= !(1 << (v - 1));
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: VertexSet) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let below = low - 1;
        // the common prefix is the part of both sets below the first difference
        let self_has = self.0 & low != 0;
        let self_rest = self.0 & !below & !low;
        let other_rest = other.0 & !below & !low;
        if self_has {
            // self continues with the smaller element unless other already ended
            if other_rest == 0 && other.0 & !below == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self_rest == 0 && self.0 & !below == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for VertexSet {
    /// Panics on labels outside `1..=62`; use [`VertexSet::try_from_vertices`]
    /// for untrusted input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::try_from_vertices(v).unwrap()
    }

    #[test]
    fn lex_order_matches_member_lists() {
        let sets = [
            vec![],
            vec![1],
            vec![1, 2],
            vec![1, 3],
            vec![1, 3, 5],
            vec![2],
            vec![2, 4],
            vec![3, 4],
            vec![3, 5],
            vec![5],
        ];
        for a in &sets {
            for b in &sets {
                assert_eq!(set(a).lex_cmp(set(b)), a.cmp(b), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert_eq!(
            VertexSet::try_from_vertices(&[0]),
            Err(Error::InvalidVertex(0, MAX_VERTICES))
        );
        assert!(VertexSet::try_from_vertices(&[63]).is_err());
    }

    #[test]
    fn display_and_bounds() {
        let s = set(&[2, 5, 9]);
        assert_eq!(std::format!("{s}"), "{2,5,9}");
        assert_eq!(s.min_vertex(), Some(2));
        assert_eq!(s.max_vertex(), Some(9));
        assert_eq!(VertexSet::full(62).len(), 62);
    }
}
