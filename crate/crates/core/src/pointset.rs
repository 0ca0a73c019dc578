//! Subsets of a finite ground set `{0, .., n-1}` packed into a machine word.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Largest supported ground set.
pub const MAX_POINTS: usize = 16;

/// A subset of the ground set, one bit per point.
///
/// A `PointSet` does not know the size of its ground set; operations that need
/// it (complement, the full set) take `n` explicitly. Ordering is canonical:
/// first by cardinality, then by the numeric value of the bit pattern.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PointSet(u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_bits(bits: u32) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set of size `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        PointSet(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(point: usize) -> Self {
        debug_assert!(point < MAX_POINTS);
        PointSet(1 << point)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        points
            .into_iter()
            .fold(PointSet::EMPTY, |acc, p| acc | PointSet::singleton(p))
    }

    pub fn contains(self, point: usize) -> bool {
        point < MAX_POINTS && self.0 & (1 << point) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: PointSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(self, other: PointSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union(self, other: PointSet) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> Self {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to the ground set of size `n`.
    pub fn complement(self, n: usize) -> Self {
        PointSet::full(n).difference(self)
    }

    pub fn with(self, point: usize) -> Self {
        self | PointSet::singleton(point)
    }

    pub fn without(self, point: usize) -> Self {
        self.difference(PointSet::singleton(point))
    }

    /// True when no bit at index `n` or above is set.
    pub fn within(self, n: usize) -> bool {
        self.is_subset(PointSet::full(n))
    }

    /// Points in increasing order.
    pub fn points(self) -> Points {
        Points(self.0)
    }

    /// Every subset of `self`, including `∅` and `self`, in increasing numeric order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.points().collect()
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        self.union(rhs)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        self.intersection(rhs)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        self.difference(rhs)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        PointSet::from_points(iter)
    }
}

#[derive(Clone, Debug)]
pub struct Points(u32);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Points {}

/// Submask enumeration, see [`PointSet::subsets`].
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
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

/// All `2^n` subsets of the ground set in canonical order.
pub fn all_subsets(n: usize) -> Vec<PointSet> {
    let mut v: Vec<PointSet> = PointSet::full(n).subsets().collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_value() {
        let mut v = vec![
            PointSet::from_points([0, 1]),
            PointSet::from_points([2]),
            PointSet::EMPTY,
            PointSet::from_points([0]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                PointSet::EMPTY,
                PointSet::from_points([0]),
                PointSet::from_points([2]),
                PointSet::from_points([0, 1]),
            ]
        );
    }

    #[test]
    fn subsets_enumerates_every_submask_once() {
        let s = PointSet::from_points([1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        let mut dedup = subs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn full_set_at_capacity() {
        assert_eq!(PointSet::full(16).len(), 16);
        assert_eq!(PointSet::full(0), PointSet::EMPTY);
        assert_eq!(all_subsets(0), vec![PointSet::EMPTY]);
        assert_eq!(all_subsets(4).len(), 16);
    }

    #[test]
    fn complement_stays_in_ground_set() {
        let s = PointSet::from_points([0, 2]);
        assert_eq!(s.complement(3), PointSet::from_points([1]));
        assert!(s.complement(5).within(5));
        assert!(!s.complement(5).within(4));
    }

    #[test]
    fn display() {
        assert_eq!(PointSet::from_points([0, 2]).to_string(), "{0,2}");
        assert_eq!(PointSet::EMPTY.to_string(), "{}");
    }
}
