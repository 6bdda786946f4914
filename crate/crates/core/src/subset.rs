//! Bit-set subsets of a finite ground set `[n] = {1, ..., n}`.
//!
//! Element `i` is stored in bit `i - 1`, so the canonical order on subsets is
//! the integer order of their encodings.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

/// Largest ground set a [`Subset`] can address.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The whole ground set `[n]`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    /// `{i}` for a 1-based element `i`.
    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&i));
        Subset(1u64 << (i - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc | Subset::singleton(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_GROUND).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
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
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    #[inline]
    pub fn insert(self, i: usize) -> Self {
        self | Subset::singleton(i)
    }

    #[inline]
    pub fn remove(self, i: usize) -> Self {
        self - Subset::singleton(i)
    }

    /// Smallest element, if any.
    #[inline]
    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest element that must fit in the ground set.
    #[inline]
    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order, 1-based.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, including the empty set and `self`, in increasing
    /// encoding order.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `[n]` in canonical order.
    pub fn all(n: usize) -> SubsetsOf {
        Subset::full(n).subsets()
    }

    /// Sum of `values[i - 1]` over the elements `i`.
    pub fn sum_of(self, values: &[i64]) -> i64 {
        self.iter().map(|i| values[i - 1]).sum()
    }
}

impl BitOr for Subset {
    type Output = Subset;
    #[inline]
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    #[inline]
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitXor for Subset {
    type Output = Subset;
    #[inline]
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    #[inline]
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    #[inline]
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Comma-separated elements, e.g. `1,3`; the empty set prints as nothing.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

pub struct SubsetsOf {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    #[inline]
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // Carry-propagation trick: next subset of `mask` above `cur`.
        let succ = (cur | !self.mask).wrapping_add(1) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(Subset(cur))
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}

/// Binomial coefficient as `u64`; callers stay at desk scale.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_all_in_order() {
        let s = Subset::from_elements([1, 3, 4]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|t| t.is_subset_of(s)));
        assert_eq!(Subset::all(0).count(), 1);
        assert_eq!(Subset::all(5).count(), 32);
    }

    #[test]
    fn element_order_and_display() {
        let s: Subset = [4, 1, 2].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(s.to_string(), "1,2,4");
        assert_eq!(format!("{s:?}"), "{1,2,4}");
        assert_eq!(s.min_element(), Some(1));
        assert_eq!(s.max_element(), Some(4));
        assert_eq!(Subset::full(MAX_GROUND).len(), MAX_GROUND);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(21, 2), 210);
    }
}
