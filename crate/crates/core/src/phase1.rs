//! Phase I: refine the initial character grouping into the Lyndon grouping.
//!
//! A suffix grouping tiles the (future) suffix array into intervals ordered
//! consistently with lexicographic suffix order. Throughout this phase every
//! group is in one of two states:
//!
//! * an unrefined *Lyndon group*: all members share their full Lyndon prefix
//!   and sit in the storage array sorted by ascending position;
//! * a *strongly preliminary group*: no member's Lyndon prefix is complete
//!   yet. Only its size is stored (in its first cell); members are tracked
//!   solely through the per-suffix group pointer.
//!
//! Groups are processed from the lexicographically highest interval down.
//! Processing a group moves each member's parent into a refined group: a
//! parent whose last child is in the processed group has just completed its
//! Lyndon prefix ("finalist") and moves to a new Lyndon group, everyone else
//! moves to a new strongly preliminary group. Parents with `l` children in
//! the group must land above parents with fewer, so parents are bucket
//! sorted by the key `2l` (finalists) / `2l + 1` (non-finalists) and the
//! sub-buckets are peeled off from the highest key to the lowest.

use crate::cell::{Cell, Symbol};
use crate::lyndon::MarkedPss;
use crate::track::{push_tracked, AuxBytes};

/// Working state of the refinement.
pub struct Phase1State<C> {
    /// Group storage: members of unrefined Lyndon groups (ascending), size
    /// cells of strongly preliminary groups. Unowned cells are unspecified.
    groups: Vec<C>,
    /// Start index of the group currently containing each suffix.
    start_of: Vec<C>,
    /// Per-group working space, grown to the largest processed group.
    scratch: Vec<C>,
    /// Starts of refined groups in processing order (descending).
    processed: Vec<C>,
    /// Counting-sort buckets; zeroed again after every use.
    key_counts: Vec<C>,
}

impl<C: Cell> Phase1State<C> {
    pub fn text_len(&self) -> usize {
        self.groups.len()
    }

    /// Raw group storage, exposed for inspection and tests.
    pub fn storage(&self) -> &[C] {
        &self.groups
    }

    /// Start of the group currently containing suffix `s`.
    pub fn start_of(&self, s: usize) -> usize {
        self.start_of[s].to_usize()
    }

    /// Starts of the groups refined so far, most recent last.
    pub fn processed_starts(&self) -> Vec<usize> {
        self.processed.iter().map(|c| c.to_usize()).collect()
    }
}

/// The finished Phase I output: group boundaries plus a suffix-to-group map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonGrouping<C> {
    pub(crate) starts: Vec<C>,
    pub(crate) group_of: Vec<C>,
}

impl<C: Cell> LyndonGrouping<C> {
    pub fn text_len(&self) -> usize {
        self.group_of.len()
    }

    pub fn group_count(&self) -> usize {
        self.starts.len()
    }

    pub fn start(&self, group: usize) -> usize {
        self.starts[group].to_usize()
    }

    pub fn group_of(&self, suffix: usize) -> usize {
        self.group_of[suffix].to_usize()
    }

    pub fn starts_vec(&self) -> Vec<usize> {
        self.starts.iter().map(|c| c.to_usize()).collect()
    }

    /// Members of every group in ascending position order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.group_count()];
        for s in 0..self.text_len() {
            out[self.group_of(s)].push(s);
        }
        out
    }
}

/// Builds the initial grouping by first character.
///
/// For each symbol `c`, the suffixes starting with `c` split into those that
/// dominate their successor (single-symbol Lyndon prefix, forming a Lyndon
/// group) and the rest (forming a strongly preliminary group directly above
/// it). Both the suffix type and the bucket fill run right to left.
pub fn initial_grouping<C: Cell, S: Symbol>(syms: &[S]) -> Phase1State<C> {
    initial_grouping_tracked(syms, &mut AuxBytes::default())
}

pub(crate) fn initial_grouping_tracked<C: Cell, S: Symbol>(
    syms: &[S],
    aux: &mut AuxBytes,
) -> Phase1State<C> {
    let n = syms.len();
    assert!(n >= 1 && n <= C::MAX_TEXT_LEN);
    let sigma = syms.iter().map(|s| s.index()).max().unwrap() + 1;

    let mut leaf_count = vec![0usize; sigma];
    let mut inner_count = vec![0usize; sigma];
    aux.grow(2 * sigma * std::mem::size_of::<usize>());
    let mut leaf = true;
    for i in (0..n).rev() {
        if i + 1 < n {
            leaf = match syms[i].cmp(&syms[i + 1]) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => leaf,
            };
        }
        if leaf {
            leaf_count[syms[i].index()] += 1;
        } else {
            inner_count[syms[i].index()] += 1;
        }
    }

    // The storage array is recycled as the suffix array buffer later on and
    // is therefore not counted as auxiliary memory.
    let mut groups = vec![C::EMPTY; n];
    let mut start_of = vec![C::ZERO; n];
    aux.grow_cells::<C>(n);

    let mut leaf_start = vec![0usize; sigma];
    let mut inner_start = vec![0usize; sigma];
    let mut leaf_cursor = vec![0usize; sigma];
    aux.grow(3 * sigma * std::mem::size_of::<usize>());
    let mut at = 0usize;
    for c in 0..sigma {
        leaf_start[c] = at;
        at += leaf_count[c];
        leaf_cursor[c] = at;
        inner_start[c] = at;
        if inner_count[c] > 0 {
            groups[at] = C::from_usize(inner_count[c]);
        }
        at += inner_count[c];
    }
    debug_assert_eq!(at, n);

    let mut leaf = true;
    for i in (0..n).rev() {
        if i + 1 < n {
            leaf = match syms[i].cmp(&syms[i + 1]) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => leaf,
            };
        }
        let c = syms[i].index();
        if leaf {
            leaf_cursor[c] -= 1;
            groups[leaf_cursor[c]] = C::from_usize(i);
            start_of[i] = C::from_usize(leaf_start[c]);
        } else {
            start_of[i] = C::from_usize(inner_start[c]);
        }
    }
    aux.shrink(5 * sigma * std::mem::size_of::<usize>());

    Phase1State {
        groups,
        start_of,
        scratch: Vec::new(),
        processed: Vec::new(),
        key_counts: Vec::new(),
    }
}

/// Runs the refinement to completion.
pub fn run_phase1<C: Cell>(state: Phase1State<C>, pss: &MarkedPss<C>) -> LyndonGrouping<C> {
    run_phase1_core(state, pss, |_, _, _| (), &mut AuxBytes::default()).0
}

/// Like [`run_phase1`], but invokes `after_group` with the state and the
/// processed interval after every group. Test-only instrumentation.
#[cfg(debug_assertions)]
pub fn run_phase1_with_hook<C: Cell>(
    state: Phase1State<C>,
    pss: &MarkedPss<C>,
    after_group: impl FnMut(&Phase1State<C>, usize, usize),
) -> LyndonGrouping<C> {
    run_phase1_core(state, pss, after_group, &mut AuxBytes::default()).0
}

/// Returns the grouping plus the spent storage array for buffer reuse.
pub(crate) fn run_phase1_core<C: Cell>(
    mut st: Phase1State<C>,
    pss: &MarkedPss<C>,
    mut after_group: impl FnMut(&Phase1State<C>, usize, usize),
    aux: &mut AuxBytes,
) -> (LyndonGrouping<C>, Vec<C>) {
    let n = st.groups.len();
    assert_eq!(pss.len(), n);

    // The interval ending at the current upper end is always an unrefined
    // Lyndon group once everything above it has been processed, so its
    // start can be read off any member's group pointer.
    let mut g_e = n - 1;
    loop {
        let member = st.groups[g_e].to_usize();
        let g_s = st.start_of[member].to_usize();
        debug_assert!(g_s <= g_e);
        process_group(&mut st, pss, g_s, g_e, aux);
        after_group(&st, g_s, g_e);
        if g_s == 0 {
            break;
        }
        g_e = g_s - 1;
    }

    // Processing visited the groups from highest to lowest.
    st.processed.reverse();
    let starts = std::mem::take(&mut st.processed);
    for (rank, &s) in starts.iter().enumerate() {
        st.groups[s.to_usize()] = C::from_usize(rank);
    }
    let mut group_of = std::mem::take(&mut st.start_of);
    for cell in group_of.iter_mut() {
        *cell = st.groups[cell.to_usize()];
    }

    aux.shrink_cells::<C>(st.scratch.len() + st.key_counts.len());
    (LyndonGrouping { starts, group_of }, st.groups)
}

/// Processes one unrefined Lyndon group `[g_s, g_e]`.
fn process_group<C: Cell>(
    st: &mut Phase1State<C>,
    pss: &MarkedPss<C>,
    g_s: usize,
    g_e: usize,
    aux: &mut AuxBytes,
) {
    push_tracked(&mut st.processed, C::from_usize(g_s), aux);
    let size = g_e - g_s + 1;
    if st.scratch.len() < size {
        aux.grow_cells::<C>(size - st.scratch.len());
        st.scratch.resize(size, C::EMPTY);
    }

    // One left-to-right scan over the sorted members. Children of the same
    // parent are consecutive, so each parent appears as one run whose length
    // is its child count; the run's last member carries the last-child flag.
    // Single-child finalists overwrite the already-read front of the group,
    // single-child non-finalists go to the scratch tail (reversed), parents
    // with more children are staged as (parent, key) pairs at the scratch
    // front for the counting sort.
    let mut finalists1 = 0usize;
    let mut others1 = 0usize;
    let mut staged = 0usize;
    let mut k = g_s;
    let mut head = pss.entry(st.groups[g_s].to_usize());
    while k <= g_e {
        let (parent_plus1, mut last_flag) = head;
        let mut run = 1;
        while k + run <= g_e {
            let m = st.groups[k + run].to_usize();
            debug_assert!(m > st.groups[k + run - 1].to_usize());
            let entry = pss.entry(m);
            if entry.0 != parent_plus1 {
                head = entry;
                break;
            }
            last_flag = entry.1;
            run += 1;
        }
        k += run;
        if parent_plus1 == 0 {
            continue; // children of the root stay put
        }
        let parent = C::from_usize(parent_plus1 - 1);
        if run == 1 {
            if last_flag {
                st.groups[g_s + finalists1] = parent;
                finalists1 += 1;
            } else {
                others1 += 1;
                st.scratch[size - others1] = parent;
            }
        } else {
            let key = 2 * run + usize::from(!last_flag);
            st.scratch[2 * staged] = parent;
            st.scratch[2 * staged + 1] = C::from_usize(key);
            staged += 1;
        }
    }
    debug_assert!(2 * staged + others1 <= size);

    for t in 0..others1 {
        st.groups[g_s + finalists1 + t] = st.scratch[size - 1 - t];
    }
    let singles = finalists1 + others1;
    let total = singles + staged;

    // Stable counting sort of the staged parents by key, ascending, into the
    // storage cells right after the single-child parents. The counter array
    // grows to the largest key seen so far, bounded by 2 * size + 1.
    let mut max_key = 0usize;
    if staged > 0 {
        for t in 0..staged {
            let key = st.scratch[2 * t + 1].to_usize();
            if key >= st.key_counts.len() {
                aux.grow_cells::<C>(key + 1 - st.key_counts.len());
                st.key_counts.resize(key + 1, C::ZERO);
            }
            st.key_counts[key] = C::from_usize(st.key_counts[key].to_usize() + 1);
            max_key = max_key.max(key);
        }
        let mut at = g_s + singles;
        for key in 4..=max_key {
            let count = st.key_counts[key].to_usize();
            st.key_counts[key] = C::from_usize(at);
            at += count;
        }
        for t in 0..staged {
            let parent = st.scratch[2 * t];
            let key = st.scratch[2 * t + 1].to_usize();
            let dst = st.key_counts[key].to_usize();
            st.groups[dst] = parent;
            st.key_counts[key] = C::from_usize(dst + 1);
        }
    }

    // Pull every parent's group pointer into scratch in one pass; the
    // reorders below read them two or three times each.
    for t in 0..total {
        st.scratch[t] = st.start_of[st.groups[g_s + t].to_usize()];
    }

    // Peel sub-buckets from the highest key down. Odd keys (non-finalists)
    // open new strongly preliminary groups, even keys new Lyndon groups; at
    // equal child counts the preliminary sub-bucket must end up higher.
    if staged > 0 {
        for key in (4..=max_key).rev() {
            let hi = st.key_counts[key].to_usize();
            let lo = if key == 4 {
                g_s + singles
            } else {
                st.key_counts[key - 1].to_usize()
            };
            if lo < hi {
                if key % 2 == 1 {
                    reorder_into_preliminary(st, g_s, lo, hi);
                } else {
                    reorder_into_lyndon(st, g_s, lo, hi);
                }
            }
        }
        for key in 4..=max_key {
            st.key_counts[key] = C::ZERO;
        }
    }
    if others1 > 0 {
        reorder_into_preliminary(st, g_s, g_s + finalists1, g_s + singles);
    }
    if finalists1 > 0 {
        reorder_into_lyndon(st, g_s, g_s, g_s + finalists1);
    }
}

/// Moves a sub-bucket of parents into new Lyndon groups carved off the tail
/// of their current (strongly preliminary) groups.
///
/// Each move shrinks the old size cell and writes the member at the freed
/// tail slot. When the count reaches zero the write lands on the size cell
/// itself and is flagged: a flagged cell at the old start tells the later
/// pointer pass that the group drained and its start index was reused.
/// Iterating the sub-bucket right to left makes ascending members land in
/// ascending cells.
fn reorder_into_lyndon<C: Cell>(st: &mut Phase1State<C>, g_s: usize, lo: usize, hi: usize) {
    let mut any_drained = false;
    for t in (lo..hi).rev() {
        let s = st.groups[t];
        let old = st.scratch[t - g_s].to_usize();
        debug_assert!(!st.groups[old].is_marked());
        let rest = st.groups[old].to_usize() - 1;
        st.groups[old] = C::from_usize(rest);
        st.groups[old + rest] = if rest == 0 {
            any_drained = true;
            s.marked()
        } else {
            s
        };
    }
    for t in lo..hi {
        let s = st.groups[t].to_usize();
        let old = st.scratch[t - g_s].to_usize();
        let cell = st.groups[old];
        let start = if cell.is_marked() {
            old
        } else {
            old + cell.to_usize()
        };
        st.start_of[s] = C::from_usize(start);
    }
    // Drop the drain flags once every pointer is settled.
    if any_drained {
        for t in lo..hi {
            let start = st.start_of[st.groups[t].to_usize()].to_usize();
            st.groups[start] = st.groups[start].unmarked();
        }
    }
}

/// Moves a sub-bucket of parents into new strongly preliminary groups at the
/// tail of their current groups. Members are never materialized; only the
/// old and new size cells and the group pointers change.
fn reorder_into_preliminary<C: Cell>(st: &mut Phase1State<C>, g_s: usize, lo: usize, hi: usize) {
    for t in lo..hi {
        let old = st.scratch[t - g_s].to_usize();
        debug_assert!(!st.groups[old].is_marked());
        let rest = st.groups[old].to_usize() - 1;
        st.groups[old] = C::from_usize(rest);
    }
    for t in lo..hi {
        let s = st.groups[t].to_usize();
        let old = st.scratch[t - g_s].to_usize();
        let start = old + st.groups[old].to_usize();
        st.groups[start] = C::ZERO; // fresh size cell, counted up below
        st.start_of[s] = C::from_usize(start);
    }
    for t in lo..hi {
        let s = st.groups[t].to_usize();
        let start = st.start_of[s].to_usize();
        st.groups[start] = C::from_usize(st.groups[start].to_usize() + 1);
    }
}
