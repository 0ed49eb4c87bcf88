//! Subsets of a small universe `{1, …, m}` packed into one machine word.
//!
//! Element `d` lives at bit `d - 1`, bits counted from the right starting at
//! zero, so the empty set is the word `0` and the whole universe is
//! `2^m - 1`. Every set remembers the universe size it was built against and
//! binary operations refuse to mix universes.
//!
//! Intersection, union, difference, equality and inclusion are the plain word
//! formulas:
//!
//! | operation      | word formula            |
//! |----------------|-------------------------|
//! | `a ∩ b`        | `a & b`                 |
//! | `a ∪ b`        | `a \| b`                |
//! | `a \ b`        | `a & (a ^ b)`           |
//! | `a ∪ {d}`      | `a \| (1 << (d - 1))`   |
//! | `a \ {d}`      | `a & !(1 << (d - 1))`   |
//! | `a == b`       | `(a ^ b) == 0`          |
//! | `a ⊆ b`        | `(a & b) == a`          |
//! | `d ∈ a`        | `a & (1 << (d - 1)) != 0` |
//!
//! Element removal deliberately does not use the tempting `a ^ (1 << (d - 1))`:
//! that toggles the bit, so "removing" an absent element would insert it.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use thiserror::Error;

/// The storage word. Unsigned so that shifts never drag a sign bit along.
pub type Word = u32;

/// Number of bits in [`Word`], and therefore the largest supported universe.
pub const WORD_BITS: u32 = Word::BITS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("universe size {0} is outside 1..={WORD_BITS}")]
    CapacityOutOfRange(u32),
    #[error("cannot combine a set over {left} elements with a set over {right} elements")]
    CapacityMismatch { left: u32, right: u32 },
    #[error("element {element} is outside the universe 1..={capacity}")]
    ElementOutOfRange { element: u32, capacity: u32 },
    #[error("shift count {0} is not below the word width {WORD_BITS}")]
    ShiftOutOfRange(u32),
    #[error("bit pattern {bits:#b} has bits beyond universe size {capacity}")]
    BitsOutsideUniverse { bits: Word, capacity: u32 },
}

/// Returns `2^k` by shifting a single one bit left `k` places.
pub fn power2(k: u32) -> Result<Word, SetError> {
    if k >= WORD_BITS {
        return Err(SetError::ShiftOutOfRange(k));
    }
    Ok(1 << k)
}

/// Returns bit `i` of `x` as `0` or `1`.
pub fn bit_value(x: Word, i: u32) -> Result<u32, SetError> {
    if i >= WORD_BITS {
        return Err(SetError::ShiftOutOfRange(i));
    }
    if x & (1 << i) == 0 {
        Ok(0)
    } else {
        Ok(1)
    }
}

#[inline]
fn universe_mask(capacity: u32) -> Word {
    if capacity == WORD_BITS {
        Word::MAX
    } else {
        (1 << capacity) - 1
    }
}

/// A subset of `{1, …, capacity}` encoded as a bit pattern.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallSet {
    bits: Word,
    capacity: u8,
}

impl SmallSet {
    fn check_capacity(capacity: u32) -> Result<(), SetError> {
        if capacity == 0 || capacity > WORD_BITS {
            Err(SetError::CapacityOutOfRange(capacity))
        } else {
            Ok(())
        }
    }

    /// The empty set over `{1, …, capacity}`.
    pub fn empty(capacity: u32) -> Result<Self, SetError> {
        Self::check_capacity(capacity)?;
        Ok(SmallSet {
            bits: 0,
            capacity: capacity as u8,
        })
    }

    /// The whole universe `{1, …, capacity}`, i.e. the word `2^capacity - 1`.
    pub fn full(capacity: u32) -> Result<Self, SetError> {
        Self::check_capacity(capacity)?;
        Ok(SmallSet {
            bits: universe_mask(capacity),
            capacity: capacity as u8,
        })
    }

    /// Wraps an existing bit pattern. Bits beyond the universe are rejected.
    pub fn from_bits(bits: Word, capacity: u32) -> Result<Self, SetError> {
        Self::check_capacity(capacity)?;
        if bits & !universe_mask(capacity) != 0 {
            return Err(SetError::BitsOutsideUniverse { bits, capacity });
        }
        Ok(SmallSet {
            bits,
            capacity: capacity as u8,
        })
    }

    /// Builds a set from a list of elements.
    pub fn from_elements<I>(capacity: u32, elements: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = u32>,
    {
        elements
            .into_iter()
            .try_fold(Self::empty(capacity)?, |set, d| set.insert(d))
    }

    /// The integer encoding of the set.
    #[inline]
    pub fn bits(self) -> Word {
        self.bits
    }

    #[inline]
    pub fn capacity(self) -> u32 {
        u32::from(self.capacity)
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    fn same_universe(self, other: SmallSet) -> Result<(), SetError> {
        if self.capacity != other.capacity {
            Err(SetError::CapacityMismatch {
                left: self.capacity(),
                right: other.capacity(),
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    fn element_bit(self, d: u32) -> Result<Word, SetError> {
        if d == 0 || d > self.capacity() {
            return Err(SetError::ElementOutOfRange {
                element: d,
                capacity: self.capacity(),
            });
        }
        Ok(1 << (d - 1))
    }

    #[inline]
    fn with_bits(self, bits: Word) -> SmallSet {
        SmallSet {
            bits,
            capacity: self.capacity,
        }
    }

    pub fn intersect(self, other: SmallSet) -> Result<SmallSet, SetError> {
        self.same_universe(other)?;
        Ok(self.with_bits(self.bits & other.bits))
    }

    pub fn union(self, other: SmallSet) -> Result<SmallSet, SetError> {
        self.same_universe(other)?;
        Ok(self.with_bits(self.bits | other.bits))
    }

    /// `self \ other`. `a & (a ^ b)` keeps exactly the bits of `a` not in `b`.
    pub fn difference(self, other: SmallSet) -> Result<SmallSet, SetError> {
        self.same_universe(other)?;
        let differing = self.bits ^ other.bits;
        Ok(self.with_bits(self.bits & differing))
    }

    /// `self ∪ {d}`.
    pub fn insert(self, d: u32) -> Result<SmallSet, SetError> {
        let bit = self.element_bit(d)?;
        Ok(self.with_bits(self.bits | bit))
    }

    /// `self \ {d}`. Removing an absent element leaves the set unchanged.
    pub fn remove(self, d: u32) -> Result<SmallSet, SetError> {
        let bit = self.element_bit(d)?;
        Ok(self.with_bits(self.bits & !bit))
    }

    pub fn equals(self, other: SmallSet) -> Result<bool, SetError> {
        self.same_universe(other)?;
        Ok(self.bits ^ other.bits == 0)
    }

    /// `self ⊆ other`.
    pub fn is_subset(self, other: SmallSet) -> Result<bool, SetError> {
        self.same_universe(other)?;
        Ok(self.bits & other.bits == self.bits)
    }

    pub fn contains(self, d: u32) -> Result<bool, SetError> {
        let bit = self.element_bit(d)?;
        Ok(self.bits & bit != 0)
    }

    /// The complement within the universe.
    pub fn complement(self) -> SmallSet {
        self.with_bits(!self.bits & universe_mask(self.capacity()))
    }

    #[inline]
    pub fn cardinality(self) -> u32 {
        self.bits.count_ones()
    }

    /// The smallest member, if any.
    #[inline]
    pub fn min_element(self) -> Option<u32> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() + 1)
        }
    }

    /// Members in increasing order.
    pub fn elements(self) -> Elements {
        Elements { bits: self.bits }
    }
}

/// Ascending iterator over the members of a [`SmallSet`].
#[derive(Debug, Clone)]
pub struct Elements {
    bits: Word,
}

impl Iterator for Elements {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.bits == 0 {
            return None;
        }
        let low = self.bits.trailing_zeros();
        // clear lowest set bit
        self.bits &= self.bits - 1;
        Some(low + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for SmallSet {
    type Item = u32;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.elements()
    }
}

// Operator forms panic on mismatched universes; the checked methods above
// return the error instead.

impl BitAnd for SmallSet {
    type Output = SmallSet;

    #[inline]
    fn bitand(self, rhs: SmallSet) -> SmallSet {
        assert_eq!(self.capacity, rhs.capacity, "set universe mismatch");
        self.with_bits(self.bits & rhs.bits)
    }
}

impl BitOr for SmallSet {
    type Output = SmallSet;

    #[inline]
    fn bitor(self, rhs: SmallSet) -> SmallSet {
        assert_eq!(self.capacity, rhs.capacity, "set universe mismatch");
        self.with_bits(self.bits | rhs.bits)
    }
}

impl Sub for SmallSet {
    type Output = SmallSet;

    #[inline]
    fn sub(self, rhs: SmallSet) -> SmallSet {
        assert_eq!(self.capacity, rhs.capacity, "set universe mismatch");
        self.with_bits(self.bits & !rhs.bits)
    }
}

impl fmt::Display for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, d) in self.elements().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallSet{}/{}", self, self.capacity)
    }
}
