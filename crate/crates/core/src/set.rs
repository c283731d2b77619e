//! Point sets over a ground set of at most 64 points, stored as a bit mask.

use std::cmp::Ordering;
use std::fmt;

/// Hard ceiling on the number of ground points: a point set is one machine word.
pub const MAX_POINTS: usize = 64;

/// A subset of ground-set positions `0..size`.
///
/// Ordering is lexicographic on the ascending index lists, so `{}` < `{0}` <
/// `{0,1}` < `{0,2}` < `{1}`. Every family and every search in the crate
/// iterates in this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_POINTS,
            "ground set of {n} points exceeds {MAX_POINTS}"
        );
        if n == MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_POINTS);
        PointSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(PointSet::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_POINTS && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_POINTS);
        PointSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        PointSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Self) -> Self {
        PointSet(self.0 ^ other.0)
    }

    /// Complement relative to a ground set of `n` points.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bit-mask order (starting with `{}`).
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Renumber the members of `self` that lie in `frame` to consecutive
    /// positions `0..frame.len()` following the order of `frame`.
    pub fn compress(self, frame: PointSet) -> PointSet {
        let mut out = 0u64;
        for (pos, i) in frame.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << pos;
            }
        }
        PointSet(out)
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let i = diff.trailing_zeros();
        // Both lists agree below `i`; exactly one of them continues with `i`.
        let (holder, other_bits) = if self.0 >> i & 1 == 1 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        // The list holding `i` is larger only if the other list already ended.
        if other_bits >> i == 0 {
            holder.reverse()
        } else {
            holder
        }
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        PointSet::from_indices(iter)
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`PointSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Iterator over every subset of a mask.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(PointSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[usize]) -> PointSet {
        PointSet::from_indices(v.iter().copied())
    }

    #[test]
    fn canonical_order_examples() {
        let mut v = vec![
            s(&[1]),
            s(&[0, 2]),
            s(&[0, 1]),
            s(&[]),
            s(&[0]),
            s(&[2]),
            s(&[0, 1, 2]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                s(&[]),
                s(&[0]),
                s(&[0, 1]),
                s(&[0, 1, 2]),
                s(&[0, 2]),
                s(&[1]),
                s(&[2])
            ]
        );
    }

    #[test]
    fn subsets_enumerates_all() {
        let all: Vec<_> = s(&[1, 3, 4]).subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s(&[1, 3, 4]))));
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn full_and_complement() {
        assert_eq!(PointSet::full(64).len(), 64);
        assert_eq!(s(&[0, 2]).complement(4), s(&[1, 3]));
        assert_eq!(s(&[1, 3, 5]).compress(s(&[1, 2, 5])), s(&[0, 2]));
    }

    proptest! {
        #[test]
        fn order_matches_index_lists(a in any::<u64>(), b in any::<u64>()) {
            let (x, y) = (PointSet(a), PointSet(b));
            prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
        }
    }
}
