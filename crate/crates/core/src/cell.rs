//! Fixed-width index cells.
//!
//! All working arrays of the construction store text positions (or small
//! counters) in unsigned cells of a single width, chosen once per run. The
//! most significant bit of a cell is reserved as a flag, and the largest
//! unflagged value serves as the "unset" sentinel. This caps the usable text
//! length at `2^(w-1) - 2` for a cell width of `w` bits.

use std::fmt::Debug;
use std::hash::Hash;

/// An unsigned array cell with a spare flag bit and a reserved empty value.
pub trait Cell: Copy + Clone + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    /// Flag bit (the most significant bit).
    const MARK: Self;
    /// Reserved "unset" value: the maximum unflagged value.
    const EMPTY: Self;
    const ZERO: Self;
    /// Largest text length representable without colliding with `EMPTY`.
    const MAX_TEXT_LEN: usize;

    fn from_usize(v: usize) -> Self;
    fn to_usize(self) -> usize;

    #[inline]
    fn is_marked(self) -> bool {
        self >= Self::MARK
    }
    fn marked(self) -> Self;
    fn unmarked(self) -> Self;
}

macro_rules! impl_cell {
    ($t:ty) => {
        impl Cell for $t {
            const MARK: Self = 1 << (<$t>::BITS - 1);
            const EMPTY: Self = <$t>::MAX >> 1;
            const ZERO: Self = 0;
            const MAX_TEXT_LEN: usize = (Self::EMPTY - 1) as usize;

            #[inline]
            fn from_usize(v: usize) -> Self {
                debug_assert!(v <= Self::EMPTY as usize);
                v as $t
            }

            #[inline]
            fn to_usize(self) -> usize {
                self as usize
            }

            #[inline]
            fn marked(self) -> Self {
                self | Self::MARK
            }

            #[inline]
            fn unmarked(self) -> Self {
                self & !Self::MARK
            }
        }
    };
}

impl_cell!(u32);
impl_cell!(u64);

/// Input symbol codes. The construction itself only compares symbols and
/// uses them as bucket indices.
pub trait Symbol: Copy + Ord + Debug + Send + Sync + 'static {
    fn index(self) -> usize;
    fn widen(self) -> u16;
}

impl Symbol for u8 {
    #[inline]
    fn index(self) -> usize {
        self as usize
    }

    #[inline]
    fn widen(self) -> u16 {
        self as u16
    }
}

impl Symbol for u16 {
    #[inline]
    fn index(self) -> usize {
        self as usize
    }

    #[inline]
    fn widen(self) -> u16 {
        self
    }
}
