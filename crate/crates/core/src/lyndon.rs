//! Previous-smaller-suffix structure with last-child flags.
//!
//! For every position `i`, `pss[i]` is the nearest position before `i` whose
//! suffix is lexicographically smaller (or -1). The array forms a tree with
//! the virtual root -1, ordered by position. Both construction phases walk
//! this tree, and both need to know whether a node is the *last* child of
//! its parent, so the flag is packed into the top bit of each entry.
//!
//! The packed layout shifts everything by one: cell `k` describes position
//! `k - 1` and stores `pss[k-1] + 1`, with cell 0 standing in for the root.

use crate::cell::{Cell, Symbol};
use crate::text::{Symbols, Text};
use crate::track::AuxBytes;

/// Packed parent links with last-child flags, `n + 1` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedPss<C> {
    cells: Vec<C>,
}

impl<C: Cell> MarkedPss<C> {
    /// Builds the structure directly from a terminated symbol sequence.
    pub fn build<S: Symbol>(syms: &[S]) -> Self {
        Self::build_tracked(syms, &mut AuxBytes::default())
    }

    pub(crate) fn build_tracked<S: Symbol>(syms: &[S], aux: &mut AuxBytes) -> Self {
        let mut cells = compute_pss_cells::<C, S>(syms, aux);
        mark_last_children_in_place(&mut cells);
        MarkedPss { cells }
    }

    /// Packs a signed parent array and adds the last-child flags.
    pub fn from_parents(pss: &[i64]) -> Self {
        let n = pss.len();
        assert!(n >= 1 && n <= C::MAX_TEXT_LEN);
        let mut cells = Vec::with_capacity(n + 1);
        cells.push(C::ZERO);
        for (i, &p) in pss.iter().enumerate() {
            assert!(p >= -1 && p < i as i64, "invalid parent for position {i}");
            cells.push(C::from_usize((p + 1) as usize));
        }
        mark_last_children_in_place(&mut cells);
        MarkedPss { cells }
    }

    /// Number of text positions described.
    pub fn len(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Parent of position `i`, or `None` for children of the root.
    pub fn parent(&self, i: usize) -> Option<usize> {
        let v = self.cells[i + 1].unmarked().to_usize();
        v.checked_sub(1)
    }

    /// Whether `i` is the last (highest) child of its parent.
    pub fn is_last_child(&self, i: usize) -> bool {
        self.cells[i + 1].is_marked()
    }

    /// Raw `(parent + 1, last-child)` pair; 0 encodes the root.
    #[inline]
    pub(crate) fn entry(&self, i: usize) -> (usize, bool) {
        let c = self.cells[i + 1];
        (c.unmarked().to_usize(), c.is_marked())
    }

    /// Signed parent array, root encoded as -1.
    pub fn parents(&self) -> Vec<i64> {
        (0..self.len())
            .map(|i| self.parent(i).map_or(-1, |p| p as i64))
            .collect()
    }

    pub(crate) fn aux_cells(&self) -> usize {
        self.cells.len()
    }
}

/// Parent array of the text, root encoded as -1.
///
/// Convenience wrapper for dumps and tests; the construction pipeline keeps
/// the packed form throughout.
pub fn compute_pss(text: &Text) -> Vec<i64> {
    let mut aux = AuxBytes::default();
    let cells = match &text.symbols {
        Symbols::Bytes(s) => compute_pss_cells::<u64, u8>(s, &mut aux),
        Symbols::Wide(s) => compute_pss_cells::<u64, u16>(s, &mut aux),
    };
    cells[1..]
        .iter()
        .map(|&c| c.to_usize() as i64 - 1)
        .collect()
}

/// Packs a signed parent array and flags each position that is the last
/// child of its parent.
pub fn mark_last_children<C: Cell>(pss: &[i64]) -> MarkedPss<C> {
    MarkedPss::from_parents(pss)
}

/// Next-smaller-suffix array derived from the parents: `nss[i]` is the
/// smallest `j > i` with `pss[j] < i`, or `n`. The length of the Lyndon
/// prefix of suffix `i` is `nss[i] - i`.
pub fn derive_nss(pss: &[i64]) -> Vec<usize> {
    let n = pss.len();
    let mut nss = vec![n; n];
    // Candidates for "nearest j to the right", nearest on top. An entry
    // whose parent is >= i can never serve a position left of i again.
    let mut candidates: Vec<usize> = Vec::new();
    for i in (0..n).rev() {
        while let Some(&j) = candidates.last() {
            if pss[j] >= i as i64 {
                candidates.pop();
            } else {
                break;
            }
        }
        if let Some(&j) = candidates.last() {
            nss[i] = j;
        }
        candidates.push(i);
    }
    nss
}

/// Monotone-stack construction of the packed parent array.
///
/// The stack holds the parent chain of the most recent position, each entry
/// carrying the length of its common prefix with the entry below. Those
/// lengths let most pops be decided by a single symbol comparison instead of
/// a fresh suffix comparison: if the stored length differs from the current
/// match length, the mismatch symbol is already known.
fn compute_pss_cells<C: Cell, S: Symbol>(syms: &[S], aux: &mut AuxBytes) -> Vec<C> {
    let n = syms.len();
    assert!(n >= 1, "texts always contain the terminator");
    assert!(n <= C::MAX_TEXT_LEN, "text too long for this cell width");
    debug_assert!(
        (0..n - 1).all(|i| syms[i] > syms[n - 1]),
        "terminator must be a strict unique minimum"
    );

    let mut cells = Vec::with_capacity(n + 1);
    aux.grow_cells::<C>(n + 1);
    cells.push(C::ZERO);

    // (position, match length with the entry below)
    let mut chain: Vec<(C, C)> = Vec::new();
    let mut chain_cap = 0usize;
    let mut memo = PeriodMemo::default();

    for i in 0..n {
        let mut l = match chain.last() {
            Some(&(t, _)) => extend_match(syms, t.to_usize(), i, 0, &mut memo),
            None => 0,
        };
        let parent_plus1 = loop {
            let Some(&(t, _)) = chain.last() else { break 0 };
            let t = t.to_usize();
            // l is the exact match length of suffixes t and i here, so the
            // symbols at offset l decide the order.
            if syms[t + l] < syms[i + l] {
                break t + 1;
            }
            let (_, below) = chain.pop().unwrap();
            if chain.is_empty() {
                break 0;
            }
            let below = below.to_usize();
            if below == l {
                let t2 = chain.last().unwrap().0.to_usize();
                l = extend_match(syms, t2, i, l, &mut memo);
            } else {
                l = below.min(l);
            }
        };
        cells.push(C::from_usize(parent_plus1));
        let stored = if parent_plus1 == 0 { 0 } else { l };
        chain.push((C::from_usize(i), C::from_usize(stored)));
        if chain.capacity() != chain_cap {
            aux.grow((chain.capacity() - chain_cap) * std::mem::size_of::<(C, C)>());
            chain_cap = chain.capacity();
        }
    }
    aux.shrink(chain_cap * std::mem::size_of::<(C, C)>());
    cells
}

/// The most recent verified periodicity: `syms[y] == syms[y + gap]` for all
/// `y` in `[lo, hi)` and `syms[hi] != syms[hi + gap]`. Repetitive inputs
/// trigger long suffix matches at the same gap over and over; remembering
/// one interval turns each repeat into a constant-time jump to the break.
#[derive(Default)]
struct PeriodMemo {
    gap: usize,
    lo: usize,
    hi: usize,
}

/// Match length of the suffixes at `a < b`, starting from a known common
/// prefix of `from` symbols.
#[inline]
fn extend_match<S: Symbol>(syms: &[S], a: usize, b: usize, from: usize, memo: &mut PeriodMemo) -> usize {
    debug_assert!(a < b);
    let gap = b - a;
    let start = a + from;
    let mut y = start;
    if gap == memo.gap && y >= memo.lo && y <= memo.hi {
        y = memo.hi;
    }
    // The unique minimal terminator forces a mismatch before b + l runs out.
    while syms[y] == syms[y + gap] {
        y += 1;
    }
    if gap == memo.gap && start <= memo.hi {
        memo.lo = memo.lo.min(start);
    } else {
        memo.gap = gap;
        memo.lo = start;
    }
    memo.hi = y;
    y - a
}

/// Flags every position that is the last child of its parent, in place.
///
/// Scanning right to left, the first visit to a parent cell comes from its
/// last child. The flag bit of a not-yet-visited cell doubles as that
/// "parent already seen" marker: seeing an unmarked parent means the current
/// position is its last child, so both cells are marked; otherwise the
/// scratch bit on the current cell is cleared. Cell 0 (the root) serves as
/// scratch and its final flag is meaningless.
fn mark_last_children_in_place<C: Cell>(cells: &mut [C]) {
    let n = cells.len() - 1;
    for k in (1..=n).rev() {
        let parent_cell = cells[k].unmarked().to_usize();
        debug_assert!(parent_cell < k);
        if cells[parent_cell].is_marked() {
            cells[k] = cells[k].unmarked();
        } else {
            cells[parent_cell] = cells[parent_cell].marked();
            cells[k] = cells[k].marked();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{is_lyndon, oracle_pss_nss};
    use crate::text::{SentinelPolicy, Text};

    fn t(raw: &[u8]) -> Text {
        Text::new(raw, SentinelPolicy::Strict).unwrap()
    }

    const SAMPLE: &[u8] = b"acedcebceece";

    #[test]
    fn pss_sample_row() {
        assert_eq!(
            compute_pss(&t(SAMPLE)),
            vec![-1, 0, 1, 1, 0, 4, 0, 6, 7, 7, 6, 10, -1]
        );
    }

    #[test]
    fn pss_short_texts() {
        assert_eq!(compute_pss(&t(b"")), vec![-1]);
        assert_eq!(compute_pss(&t(b"ab")), vec![-1, 0, -1]);
    }

    #[test]
    fn pss_matches_oracle_on_small_inputs() {
        for raw in [
            &b"aaaa"[..],
            b"abcabc",
            b"bbbaaa",
            b"abaababaabaab",
            b"zyxabczyx",
            b"aab",
            b"ba",
        ] {
            let text = t(raw);
            let (pss, _) = oracle_pss_nss(&text);
            assert_eq!(compute_pss(&text), pss, "text {raw:?}");
        }
    }

    #[test]
    fn last_child_flags_sample() {
        let pss = compute_pss(&t(SAMPLE));
        let marked = MarkedPss::<u32>::from_parents(&pss);
        let flagged: Vec<usize> = (0..13).filter(|&i| marked.is_last_child(i)).collect();
        assert_eq!(flagged, vec![3, 5, 6, 9, 10, 11, 12]);
        assert_eq!(marked.parents(), pss);
    }

    #[test]
    fn last_child_flags_tiny() {
        let marked = MarkedPss::<u32>::from_parents(&[-1]);
        assert!(marked.is_last_child(0));

        let marked = MarkedPss::<u32>::from_parents(&[-1, 0, -1]);
        let flagged: Vec<usize> = (0..3).filter(|&i| marked.is_last_child(i)).collect();
        assert_eq!(flagged, vec![1, 2]);
    }

    #[test]
    fn build_equals_from_parents() {
        for raw in [&b""[..], b"a", b"ab", SAMPLE, b"abaababaabaab"] {
            let text = t(raw);
            let via_text = match text.symbols() {
                Symbols::Bytes(s) => MarkedPss::<u32>::build(s.as_slice()),
                Symbols::Wide(_) => unreachable!(),
            };
            let via_parents = MarkedPss::<u32>::from_parents(&compute_pss(&text));
            assert_eq!(via_text, via_parents);
        }
    }

    #[test]
    fn nss_sample_row_and_lyndon_lengths() {
        let pss = compute_pss(&t(SAMPLE));
        let nss = derive_nss(&pss);
        assert_eq!(nss, vec![12, 4, 3, 4, 6, 6, 12, 10, 9, 10, 12, 12, 13]);
        let lens: Vec<usize> = nss.iter().zip(0..).map(|(&x, i)| x - i).collect();
        assert_eq!(lens, vec![12, 3, 1, 1, 2, 1, 6, 3, 1, 1, 2, 1, 1]);
        // position 7 carries the three-symbol prefix "cee"
        assert_eq!(lens[7], 3);
        let wide = t(SAMPLE).to_wide();
        for i in 0..13 {
            assert!(is_lyndon(&wide[i..nss[i]]));
        }
    }

    #[test]
    fn nss_trivial() {
        assert_eq!(derive_nss(&[-1]), vec![1]);
    }

    #[test]
    fn composition_identity() {
        // A node's Lyndon prefix is one symbol plus its children's prefixes.
        let pss = compute_pss(&t(SAMPLE));
        let nss = derive_nss(&pss);
        for i in 0..pss.len() {
            let children: Vec<usize> =
                (0..pss.len()).filter(|&c| pss[c] == i as i64).collect();
            if !children.is_empty() {
                let sum: usize = children.iter().map(|&c| nss[c] - c).sum();
                assert_eq!(nss[i] - i, 1 + sum);
            }
        }
    }
}
