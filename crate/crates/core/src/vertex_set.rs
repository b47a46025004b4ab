//! Word-parallel vertex subsets over a dense index space `0..universe`.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORDS: usize = 4;

/// Largest vertex count any [`VertexSet`] (and hence any graph) can hold.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A subset of `0..universe`, stored inline as a fixed bit array.
///
/// Sets are `Copy`; all algebra allocates nothing. Operands of binary
/// operations are expected to share a universe.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: [u64; WORDS],
    universe: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES, "universe {universe} too large");
        VertexSet { bits: [0; WORDS], universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (w, word) in s.bits.iter_mut().enumerate() {
            let lo = w * 64;
            if universe >= lo + 64 {
                *word = u64::MAX;
            } else if universe > lo {
                *word = (1u64 << (universe - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    /// Builds a set from vertex indices, rejecting any index `>= universe`.
    pub fn from_vertices(universe: usize, vertices: &[usize]) -> Result<Self> {
        if universe > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: universe, max: MAX_VERTICES });
        }
        let mut s = Self::empty(universe);
        for &v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.bits[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.bits[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.bits[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.bits.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe) - *self
    }

    /// Members strictly greater than `v`.
    pub fn above(&self, v: usize) -> Self {
        let cut = v + 1;
        let mut s = *self;
        for (w, word) in s.bits.iter_mut().enumerate() {
            let lo = w * 64;
            if cut >= lo + 64 {
                *word = 0;
            } else if cut > lo {
                *word &= !((1u64 << (cut - lo)) - 1);
            }
        }
        s
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.iter().zip(other.bits.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.bits.iter().zip(other.bits.iter()).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> Iter {
        Iter { bits: self.bits, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter {
    bits: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.bits[self.word];
            if w != 0 {
                self.bits[self.word] = w & (w - 1);
                return Some(self.word * 64 + w.trailing_zeros() as usize);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

macro_rules! bitwise {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident, |$a:ident, $b:ident| $e:expr) => {
        impl $trait for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $method(mut self, rhs: VertexSet) -> VertexSet {
                self.$assign(rhs);
                self
            }
        }
        impl $assign_trait for VertexSet {
            #[inline]
            fn $assign(&mut self, rhs: VertexSet) {
                debug_assert_eq!(self.universe, rhs.universe);
                for ($a, $b) in self.bits.iter_mut().zip(rhs.bits.iter()) {
                    *$a = $e;
                }
            }
        }
    };
}

bitwise!(BitOr, bitor, BitOrAssign, bitor_assign, |a, b| *a | *b);
bitwise!(BitAnd, bitand, BitAndAssign, bitand_assign, |a, b| *a & *b);
bitwise!(Sub, sub, SubAssign, sub_assign, |a, b| *a & !*b);
