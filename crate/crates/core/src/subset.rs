//! Vertex subsets as fixed-width bit patterns.
//!
//! Vertices are 1-based; vertex `v` lives in bit `v - 1`. The derived
//! ordering is the canonical one used by every enumeration in the crate:
//! ascending cardinality, ties broken lexicographically on the sorted
//! member lists.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set a [`VertexSet`] can address.
pub const MAX_GROUND: usize = 64;

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
        assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_GROUND).contains(&v), "vertex {v} out of range");
        VertexSet(1u64 << (v - 1))
    }

    /// Builds a set from 1-based vertex labels. Panics on labels outside
    /// `1..=64`; use [`crate::Complex::new`] for validated input.
    pub fn of(vertices: &[usize]) -> Self {
        vertices.iter().fold(Self::EMPTY, |s, &v| s.with(v))
    }

    pub fn with(self, v: usize) -> Self {
        self.union(Self::singleton(v))
    }

    pub fn without(self, v: usize) -> Self {
        self.difference(Self::singleton(v))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_GROUND).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement inside `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    /// Largest member, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Moves every vertex `v` to `v + offset`.
    pub fn shift_up(self, offset: usize) -> Self {
        if offset == 0 {
            return self;
        }
        debug_assert!(self.max().is_none_or(|v| v + offset <= MAX_GROUND));
        VertexSet(self.0 << offset)
    }

    /// Keeps vertices `offset+1..=offset+n` and moves them down to `1..=n`.
    pub fn shift_down(self, offset: usize, n: usize) -> Self {
        VertexSet(self.0 >> offset).intersection(Self::full(n))
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` (no particular order).
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `{1, ..., n}` in canonical order.
    pub fn all_canonical(n: usize) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = Self::full(n).subsets().collect();
        out.sort();
        out
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            if self.0 == other.0 {
                Ordering::Equal
            } else {
                // The smallest vertex on which the two member lists differ
                // belongs to the lexicographically smaller list.
                let d = self.0 ^ other.0;
                if self.0 & d & d.wrapping_neg() != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(Self::EMPTY, |s, v| s.with(v))
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Submask enumeration, ascending as integers.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let sets = VertexSet::all_canonical(4);
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        let mut expected = lists.clone();
        expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        assert_eq!(lists, expected);
        assert_eq!(sets.len(), 16);
        assert_eq!(sets[0], VertexSet::EMPTY);
        assert_eq!(sets[5], VertexSet::of(&[1, 2]));
        assert_eq!(sets[8], VertexSet::of(&[2, 3]));
    }

    #[test]
    fn subsets_enumerates_every_submask_once() {
        let s = VertexSet::of(&[2, 5, 7]);
        let mut subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        subs.sort();
        subs.dedup();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn shifting_round_trips() {
        let s = VertexSet::of(&[1, 3]);
        assert_eq!(s.shift_up(4), VertexSet::of(&[5, 7]));
        assert_eq!(s.shift_up(4).shift_down(4, 4), s);
        assert_eq!(VertexSet::of(&[1, 6]).shift_down(4, 4), VertexSet::of(&[2]));
    }

    #[test]
    fn full_64_and_display() {
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::of(&[3, 1]).to_string(), "{1,3}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
        assert_eq!(VertexSet::of(&[2, 9]).max(), Some(9));
    }
}
