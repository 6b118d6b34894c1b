use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices stored as a bitmask; bit `i` is vertex `i + 1`.
///
/// Ordering is lexicographic on the ascending vertex sequence, so `{1,2} < {1,2,3} < {1,3}`.
/// Serialized as an array of 1-based labels.
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

    /// The set `{0, .., n-1}` (labels `1..=n`).
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// Builds a set from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }

    /// Builds a set from 1-based labels, checking `1 <= label <= n`.
    pub fn from_labels(labels: &[usize], n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut bits = 0u64;
        for &l in labels {
            if l == 0 || l > n {
                return Err(Error::VertexOutOfRange { vertex: l, n });
            }
            bits |= 1u64 << (l - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn shifted(self, by: usize) -> Self {
        VertexSet(self.0 << by)
    }

    /// 0-based indices in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// 1-based labels in ascending order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    /// All subsets of `self`, including `self` and the empty set, in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Subsets of exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VertexSet> {
        let elems: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        if k > elems.len() {
            return out;
        }
        let len = elems.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(VertexSet::from_indices(idx.iter().map(|&i| elems[i])));
            let mut i = k;
            while i > 0 && idx[i - 1] == i - 1 + len - k {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Iter {}

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

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        VertexSet::from_labels(&labels, MAX_VERTICES).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order_on_sorted_vertices() {
        let a = VertexSet::from_indices([0, 1]);
        let b = VertexSet::from_indices([0, 1, 2]);
        let c = VertexSet::from_indices([0, 2]);
        let d = VertexSet::from_indices([1]);
        let mut v = vec![d, c, b, a];
        v.sort();
        assert_eq!(v, vec![a, b, c, d]);
        assert!(VertexSet::EMPTY < a);
    }

    #[test]
    fn subsets_enumerates_every_submask_once() {
        let s = VertexSet::from_indices([1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        let mut dedup = subs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn fixed_size_subsets_are_lexicographic() {
        let s = VertexSet::full(4);
        let twos = s.subsets_of_size(2);
        let labels: Vec<_> = twos.iter().map(|x| x.labels()).collect();
        assert_eq!(
            labels,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(s.subsets_of_size(0), vec![VertexSet::EMPTY]);
        assert_eq!(s.subsets_of_size(4), vec![s]);
        assert!(s.subsets_of_size(5).is_empty());
    }

    #[test]
    fn labels_are_checked() {
        assert!(VertexSet::from_labels(&[0], 3).is_err());
        assert!(VertexSet::from_labels(&[4], 3).is_err());
        assert_eq!(VertexSet::from_labels(&[1, 3], 3).unwrap().labels(), vec![1, 3]);
    }

    #[test]
    fn serde_uses_one_based_labels() {
        let s = VertexSet::from_indices([0, 4]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,5]");
        let back: VertexSet = serde_json::from_str("[1,5]").unwrap();
        assert_eq!(back, s);
    }
}
