//! Deterministic accounting of auxiliary working memory.
//!
//! The construction routines report their peak auxiliary allocation in bytes,
//! excluding the input text and the suffix array buffer itself. Instead of
//! hooking the global allocator, the known allocation sites update an
//! injected counter, which makes the figure reproducible run to run.

use crate::cell::Cell;

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct AuxBytes {
    current: usize,
    peak: usize,
}

impl AuxBytes {
    #[inline]
    pub(crate) fn grow(&mut self, bytes: usize) {
        self.current += bytes;
        self.peak = self.peak.max(self.current);
    }

    #[inline]
    pub(crate) fn shrink(&mut self, bytes: usize) {
        debug_assert!(bytes <= self.current);
        self.current -= bytes;
    }

    #[inline]
    pub(crate) fn grow_cells<C: Cell>(&mut self, cells: usize) {
        self.grow(cells * std::mem::size_of::<C>());
    }

    #[inline]
    pub(crate) fn shrink_cells<C: Cell>(&mut self, cells: usize) {
        self.shrink(cells * std::mem::size_of::<C>());
    }

    pub(crate) fn peak(&self) -> usize {
        self.peak
    }
}

/// Push that keeps the counter in sync with the vector's capacity growth.
#[inline]
pub(crate) fn push_tracked<T: Copy>(v: &mut Vec<T>, value: T, aux: &mut AuxBytes) {
    let before = v.capacity();
    v.push(value);
    let after = v.capacity();
    if after != before {
        aux.grow((after - before) * std::mem::size_of::<T>());
    }
}
