//! Point subsets as fixed-width bit masks.

use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

/// Hard ceiling on the number of points a mask can address.
pub const MAX_POINTS: usize = 24;

/// A subset of the points `0..n` of some ambient space.
///
/// The mask itself does not know `n`; the owning space does. Ordering is by
/// raw bit value, which makes every superset compare greater than or equal
/// to its subsets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole point set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(point: usize) -> Self {
        SubsetMask(1u32 << point)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        points
            .into_iter()
            .fold(SubsetMask::EMPTY, |acc, p| acc | SubsetMask::singleton(p))
    }

    #[inline]
    pub const fn contains(self, point: usize) -> bool {
        self.0 >> point & 1 == 1
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// Complement relative to the `n`-point ambient set.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    /// Lowest point in the set, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Points in increasing order.
    pub fn points(self) -> Points {
        Points(self.0)
    }

    /// Every subset of `self`, starting at the empty set, in increasing
    /// numeric order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// Every subset of an `n`-point set in increasing numeric order.
    pub fn all(n: usize) -> Subsets {
        SubsetMask::full(n).subsets()
    }

    /// True when `self` fits inside an `n`-point ambient set.
    #[inline]
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset(SubsetMask::full(n))
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        self.union(rhs)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        self.intersection(rhs)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        self.difference(rhs)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points()).finish()
    }
}

/// Iterator over the points of a mask.
#[derive(Clone)]
pub struct Points(u32);

impl Iterator for Points {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

/// Carry-ripple enumeration of the subsets of a fixed mask.
#[derive(Clone)]
pub struct Subsets {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let current = self.next?;
        let following = current.wrapping_sub(self.set) & self.set;
        self.next = if following == 0 { None } else { Some(following) };
        Some(SubsetMask(current))
    }
}
