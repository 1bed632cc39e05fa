//! Phase II: expand the Lyndon grouping into the suffix array.
//!
//! Suffixes are discovered in ascending lexicographic order. Whenever a
//! suffix `i` surfaces in the output array, every suffix whose next smaller
//! suffix is `i` becomes the minimum of its own group and is written at its
//! group's current start. That set is enumerated without any extra state:
//! it is nonempty exactly when `pss[i] + 1 < i` (recorded as a flag on the
//! written entry), starts at `i - 1`, and continues through the parent links
//! as long as the current node is the last child of its parent.
//!
//! The breadth-first variant drains a small queue of pending suffixes level
//! by level and refills it by scanning ahead in the output array, which
//! overlaps the dependent loads of many parent chains. Its output does not
//! depend on the queue capacity.

use crate::cell::Cell;
use crate::lyndon::MarkedPss;
use crate::phase1::LyndonGrouping;
use crate::track::AuxBytes;

/// Ring queue of pending suffixes. The slot count is rounded up to a power
/// of two so the wrap-around is a mask, not a division.
struct Ring<C> {
    buf: Vec<C>,
    mask: usize,
    head: usize,
    len: usize,
}

impl<C: Cell> Ring<C> {
    fn new(capacity: usize, aux: &mut AuxBytes) -> Self {
        let slots = capacity.next_power_of_two();
        aux.grow_cells::<C>(slots);
        Ring {
            buf: vec![C::ZERO; slots],
            mask: slots - 1,
            head: 0,
            len: 0,
        }
    }

    #[inline]
    fn push(&mut self, v: usize) {
        debug_assert!(self.len < self.buf.len());
        let tail = (self.head + self.len) & self.mask;
        self.buf[tail] = C::from_usize(v);
        self.len += 1;
    }

    #[inline]
    fn pop(&mut self) -> usize {
        debug_assert!(self.len > 0);
        let v = self.buf[self.head];
        self.head = (self.head + 1) & self.mask;
        self.len -= 1;
        v.to_usize()
    }
}

/// Breadth-first refinement with a bounded queue. The result is the suffix
/// array regardless of `queue_capacity >= 1`.
pub fn run_phase2_bfs<C: Cell>(
    grouping: LyndonGrouping<C>,
    pss: &MarkedPss<C>,
    queue_capacity: usize,
) -> Vec<C> {
    let mut sa = vec![C::EMPTY; grouping.text_len()];
    phase2_bfs_into(&mut sa, grouping, pss, queue_capacity, &mut AuxBytes::default());
    sa
}

pub(crate) fn phase2_bfs_into<C: Cell>(
    sa: &mut [C],
    grouping: LyndonGrouping<C>,
    pss: &MarkedPss<C>,
    queue_capacity: usize,
    aux: &mut AuxBytes,
) {
    assert!(queue_capacity >= 1);
    let LyndonGrouping {
        mut starts,
        group_of,
    } = grouping;
    let n = group_of.len();
    assert_eq!(pss.len(), n);
    assert_eq!(sa.len(), n);
    debug_assert!(sa.iter().all(|&c| c == C::EMPTY));

    // The terminator suffix is the global minimum; its entry is flagged
    // whenever its predecessor suffix still has to be inserted.
    sa[0] = seed_entry::<C>(n);
    starts[group_of[n - 1].to_usize()] = C::from_usize(1);

    let mut queue = Ring::<C>::new(queue_capacity.min(n), aux);
    let mut cursor = 0usize;
    loop {
        // Refill from the filled prefix of the output array until the queue
        // is at capacity or an undetermined entry blocks the scan.
        while queue.len < queue_capacity && cursor < n {
            let entry = sa[cursor];
            if entry == C::EMPTY {
                break;
            }
            if entry.is_marked() {
                let v = entry.unmarked();
                sa[cursor] = v;
                queue.push(v.to_usize() - 1);
            }
            cursor += 1;
        }
        if queue.len == 0 {
            break;
        }
        // Insert one queue generation; parents enter in the same order as
        // their children.
        for _ in 0..queue.len {
            let v = queue.pop();
            let (parent_plus1, last_child) = pss.entry(v);
            if last_child {
                debug_assert!(parent_plus1 >= 1, "the root must never be enqueued");
                queue.push(parent_plus1 - 1);
            }
            let group = group_of[v].to_usize();
            let dst = starts[group].to_usize();
            starts[group] = C::from_usize(dst + 1);
            let entry = C::from_usize(v);
            sa[dst] = if parent_plus1 < v { entry.marked() } else { entry };
        }
    }
    debug_assert_eq!(cursor, n, "every entry must be scanned exactly once");

    aux.shrink_cells::<C>(queue.buf.len());
}

/// Single-chain variant: scan the output array once and, at every flagged
/// entry, walk the whole parent chain immediately. Serves as the reference
/// the breadth-first version is checked against.
pub fn run_phase2_reference<C: Cell>(grouping: LyndonGrouping<C>, pss: &MarkedPss<C>) -> Vec<C> {
    let LyndonGrouping {
        mut starts,
        group_of,
    } = grouping;
    let n = group_of.len();
    assert_eq!(pss.len(), n);

    let mut sa = vec![C::EMPTY; n];
    sa[0] = seed_entry::<C>(n);
    starts[group_of[n - 1].to_usize()] = C::from_usize(1);

    for i in 0..n {
        let entry = sa[i];
        debug_assert!(entry != C::EMPTY);
        if !entry.is_marked() {
            continue;
        }
        sa[i] = entry.unmarked();
        let mut v = entry.unmarked().to_usize() - 1;
        loop {
            let (parent_plus1, last_child) = pss.entry(v);
            let group = group_of[v].to_usize();
            let dst = starts[group].to_usize();
            starts[group] = C::from_usize(dst + 1);
            let cell = C::from_usize(v);
            sa[dst] = if parent_plus1 < v { cell.marked() } else { cell };
            if !last_child {
                break;
            }
            debug_assert!(parent_plus1 >= 1);
            v = parent_plus1 - 1;
        }
    }
    sa
}

/// First output entry: the terminator position, flagged unless it is the
/// whole text.
fn seed_entry<C: Cell>(n: usize) -> C {
    let entry = C::from_usize(n - 1);
    if n > 1 {
        entry.marked()
    } else {
        entry
    }
}
