//! Text in, suffix array out: width dispatch, per-phase timing, working
//! memory accounting, and an independent result checker.

use std::time::{Duration, Instant};

use crate::cell::{Cell, Symbol};
use crate::error::Error;
use crate::lyndon::MarkedPss;
use crate::phase1::{initial_grouping_tracked, run_phase1_core};
use crate::phase2::phase2_bfs_into;
use crate::text::{choose_width, IndexWidth, Symbols, Text};
use crate::track::AuxBytes;

/// A suffix array in the cell width it was built with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuffixArray {
    W32(Vec<u32>),
    W64(Vec<u64>),
}

impl SuffixArray {
    pub fn len(&self) -> usize {
        match self {
            SuffixArray::W32(v) => v.len(),
            SuffixArray::W64(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn width(&self) -> IndexWidth {
        match self {
            SuffixArray::W32(_) => IndexWidth::W32,
            SuffixArray::W64(_) => IndexWidth::W64,
        }
    }

    pub fn get(&self, k: usize) -> usize {
        match self {
            SuffixArray::W32(v) => v[k] as usize,
            SuffixArray::W64(v) => v[k] as usize,
        }
    }

    pub fn iter(&self) -> Indices<'_> {
        Indices { sa: self, at: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Index-wise equality regardless of cell width.
    pub fn same_indices(&self, other: &SuffixArray) -> bool {
        self.len() == other.len() && self.iter().eq(other.iter())
    }
}

pub struct Indices<'a> {
    sa: &'a SuffixArray,
    at: usize,
}

impl Iterator for Indices<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.at < self.sa.len() {
            self.at += 1;
            Some(self.sa.get(self.at - 1))
        } else {
            None
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.sa.len() - self.at;
        (rest, Some(rest))
    }
}

/// Construction knobs.
#[derive(Debug, Clone)]
pub struct BuildConfig {
    /// Maximum number of pending suffixes the insertion queue may hold.
    /// Affects memory locality only, never the output.
    pub queue_capacity: usize,
    /// Force a specific cell width instead of choosing by text length.
    pub forced_width: Option<IndexWidth>,
}

pub const DEFAULT_QUEUE_CAPACITY: usize = 1 << 10;

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            queue_capacity: DEFAULT_QUEUE_CAPACITY,
            forced_width: None,
        }
    }
}

/// Per-run measurements.
///
/// `peak_aux_bytes` counts auxiliary allocations only: the input text and
/// the suffix array buffer itself are excluded, and the figure comes from
/// the deterministic internal counter rather than the system allocator.
#[derive(Debug, Clone)]
pub struct RunStats {
    pub init_time: Duration,
    pub phase1_time: Duration,
    pub phase2_time: Duration,
    pub peak_aux_bytes: usize,
    pub width: IndexWidth,
    pub group_count: usize,
}

impl RunStats {
    pub fn total_time(&self) -> Duration {
        self.init_time + self.phase1_time + self.phase2_time
    }
}

/// Builds the suffix array of `text` with default settings.
pub fn suffix_array(text: &Text) -> SuffixArray {
    suffix_array_with_stats(text, &BuildConfig::default())
        .expect("default config never forces a width")
        .0
}

/// Width actually used for a text of `n` symbols: the forced one if it can
/// address the text, the automatic choice otherwise.
pub fn effective_width(n: usize, forced: Option<IndexWidth>) -> Result<IndexWidth, Error> {
    match forced {
        Some(w) if n > w.max_text_len() => Err(Error::WidthTooSmall(n)),
        Some(w) => Ok(w),
        None => choose_width(n),
    }
}

/// Builds the suffix array and reports per-phase statistics.
pub fn suffix_array_with_stats(
    text: &Text,
    config: &BuildConfig,
) -> Result<(SuffixArray, RunStats), Error> {
    assert!(config.queue_capacity >= 1);
    let n = text.len();
    let width = effective_width(n, config.forced_width)?;
    let (sa, stats) = match (width, &text.symbols) {
        (IndexWidth::W32, Symbols::Bytes(s)) => {
            let (sa, st) = construct::<u32, u8>(s, config.queue_capacity);
            (SuffixArray::W32(sa), st)
        }
        (IndexWidth::W32, Symbols::Wide(s)) => {
            let (sa, st) = construct::<u32, u16>(s, config.queue_capacity);
            (SuffixArray::W32(sa), st)
        }
        (IndexWidth::W64, Symbols::Bytes(s)) => {
            let (sa, st) = construct::<u64, u8>(s, config.queue_capacity);
            (SuffixArray::W64(sa), st)
        }
        (IndexWidth::W64, Symbols::Wide(s)) => {
            let (sa, st) = construct::<u64, u16>(s, config.queue_capacity);
            (SuffixArray::W64(sa), st)
        }
    };
    let stats = RunStats {
        init_time: stats.0,
        phase1_time: stats.1,
        phase2_time: stats.2,
        peak_aux_bytes: stats.3,
        width,
        group_count: stats.4,
    };
    Ok((sa, stats))
}

type RawStats = (Duration, Duration, Duration, usize, usize);

fn construct<C: Cell, S: Symbol>(syms: &[S], queue_capacity: usize) -> (Vec<C>, RawStats) {
    let mut aux = AuxBytes::default();

    let t = Instant::now();
    let pss = MarkedPss::<C>::build_tracked(syms, &mut aux);
    let state = initial_grouping_tracked::<C, S>(syms, &mut aux);
    let init_time = t.elapsed();

    let t = Instant::now();
    let (grouping, mut buffer) = run_phase1_core(state, &pss, |_, _, _| (), &mut aux);
    let phase1_time = t.elapsed();
    let group_count = grouping.group_count();

    let t = Instant::now();
    buffer.fill(C::EMPTY);
    let grouping_cells = grouping.group_count() + grouping.text_len();
    phase2_bfs_into(&mut buffer, grouping, &pss, queue_capacity, &mut aux);
    aux.shrink_cells::<C>(grouping_cells);
    let phase2_time = t.elapsed();

    aux.shrink_cells::<C>(pss.aux_cells());
    drop(pss);

    (
        buffer,
        (init_time, phase1_time, phase2_time, aux.peak(), group_count),
    )
}

/// Checks that `sa` is the suffix array of `text`: a permutation of all
/// positions with every adjacent pair of suffixes in strictly increasing
/// order. Runs in linear time by comparing adjacent suffixes through their
/// own ranks.
pub fn verify_suffix_array(text: &Text, sa: &SuffixArray) -> bool {
    match (&text.symbols, sa) {
        (Symbols::Bytes(s), SuffixArray::W32(v)) => verify_inner(s, v),
        (Symbols::Bytes(s), SuffixArray::W64(v)) => verify_inner(s, v),
        (Symbols::Wide(s), SuffixArray::W32(v)) => verify_inner(s, v),
        (Symbols::Wide(s), SuffixArray::W64(v)) => verify_inner(s, v),
    }
}

fn verify_inner<S: Symbol, C: Cell>(syms: &[S], sa: &[C]) -> bool {
    let n = syms.len();
    if sa.len() != n || n > C::MAX_TEXT_LEN {
        return false;
    }
    let mut rank = vec![C::EMPTY; n];
    for (k, &cell) in sa.iter().enumerate() {
        let v = cell.to_usize();
        if v >= n || rank[v] != C::EMPTY {
            return false;
        }
        rank[v] = C::from_usize(k);
    }
    for k in 0..n - 1 {
        let a = sa[k].to_usize();
        let b = sa[k + 1].to_usize();
        match syms[a].cmp(&syms[b]) {
            std::cmp::Ordering::Less => {}
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {
                // Identical first symbols: order is decided by the ranks of
                // the successor suffixes; a shorter suffix precedes.
                if a + 1 == n {
                    continue;
                }
                if b + 1 == n || rank[a + 1] >= rank[b + 1] {
                    return false;
                }
            }
        }
    }
    true
}
