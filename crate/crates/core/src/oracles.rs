//! Brute-force reference implementations.
//!
//! Everything in this module is deliberately naive: definitions are
//! transcribed directly, with no data shared with the optimized construction
//! path, so the two sides fail independently. A size guard prevents
//! accidental use on benchmark-sized inputs.

use crate::text::Text;

/// Inputs above this length are rejected; the helpers here are quadratic or
/// worse and meant for tests and small dumps only.
pub const ORACLE_MAX_LEN: usize = 100_000;

fn guard(n: usize) {
    assert!(
        n <= ORACLE_MAX_LEN,
        "oracle helpers are capped at {ORACLE_MAX_LEN} symbols (got {n})"
    );
}

/// Sorts all suffixes with a comparison sort.
pub fn brute_force_sa(text: &Text) -> Vec<usize> {
    guard(text.len());
    let syms = text.to_wide();
    let mut sa: Vec<usize> = (0..syms.len()).collect();
    sa.sort_unstable_by(|&a, &b| syms[a..].cmp(&syms[b..]));
    sa
}

/// Previous and next smaller suffixes, straight from the definitions:
/// `pss[i]` is the largest `j < i` with suffix `j` smaller than suffix `i`
/// (or -1), and `nss[i]` is the smallest `j > i` with a smaller suffix,
/// where the empty suffix at position `n` is smaller than everything.
pub fn oracle_pss_nss(text: &Text) -> (Vec<i64>, Vec<usize>) {
    guard(text.len());
    let syms = text.to_wide();
    let n = syms.len();
    let less = |a: usize, b: usize| syms[a..] < syms[b..];
    let mut pss = vec![-1i64; n];
    let mut nss = vec![n; n];
    for i in 0..n {
        if let Some(j) = (0..i).rev().find(|&j| less(j, i)) {
            pss[i] = j as i64;
        }
        if let Some(j) = (i + 1..n).find(|&j| less(j, i)) {
            nss[i] = j;
        }
    }
    (pss, nss)
}

/// A nonempty word is Lyndon when it is strictly smaller than each of its
/// proper suffixes.
pub fn is_lyndon<S: Ord>(word: &[S]) -> bool {
    assert!(!word.is_empty(), "a Lyndon word is nonempty by definition");
    (1..word.len()).all(|k| *word < word[k..])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGroup {
    /// The Lyndon prefix shared by every member.
    pub context: Vec<u16>,
    /// Member positions in ascending text order.
    pub members: Vec<usize>,
}

/// The fully refined grouping: suffixes in sorted order, partitioned where
/// the Lyndon prefix string changes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGrouping {
    pub groups: Vec<CanonicalGroup>,
}

impl CanonicalGrouping {
    /// Group start offsets within the suffix array, ascending.
    pub fn starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.groups.len());
        let mut at = 0;
        for g in &self.groups {
            starts.push(at);
            at += g.members.len();
        }
        starts
    }
}

pub fn canonical_lyndon_grouping(text: &Text) -> CanonicalGrouping {
    guard(text.len());
    let syms = text.to_wide();
    let sa = brute_force_sa(text);
    let (_, nss) = oracle_pss_nss(text);
    let mut groups: Vec<CanonicalGroup> = Vec::new();
    for &s in &sa {
        let prefix = &syms[s..nss[s]];
        match groups.last_mut() {
            Some(g) if g.context == prefix => g.members.push(s),
            _ => groups.push(CanonicalGroup {
                context: prefix.to_vec(),
                members: vec![s],
            }),
        }
    }
    for g in &mut groups {
        debug_assert!(is_lyndon(&g.context));
        g.members.sort_unstable();
    }
    CanonicalGrouping { groups }
}

/// The set of positions whose next smaller suffix is `i`, ascending.
pub fn oracle_ps_set(text: &Text, i: usize) -> Vec<usize> {
    guard(text.len());
    assert!(i < text.len());
    let (_, nss) = oracle_pss_nss(text);
    (0..i).filter(|&j| nss[j] == i).collect()
}
