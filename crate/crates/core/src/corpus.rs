//! Deterministic corpus generators for tests and benchmarks.
//!
//! All randomness comes from ChaCha8 seeded with a caller-supplied 64-bit
//! value, so the same parameters always produce byte-identical output.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Prefix of the infinite Fibonacci word over `{a, b}`:
/// `s1 = "a"`, `s2 = "ab"`, `s(k) = s(k-1) s(k-2)`.
pub fn fibonacci_word(len: usize) -> Vec<u8> {
    if len == 0 {
        return Vec::new();
    }
    let mut prev: Vec<u8> = b"a".to_vec();
    let mut cur: Vec<u8> = b"ab".to_vec();
    while cur.len() < len {
        let next_len = cur.len() + prev.len();
        let mut next = Vec::with_capacity(next_len);
        next.extend_from_slice(&cur);
        next.extend_from_slice(&prev);
        prev = cur;
        cur = next;
    }
    cur.truncate(len);
    cur
}

/// Independent uniform symbols drawn from `{1, ..., sigma}`. Zero is never
/// produced, so the output is valid under the strict sentinel policy.
pub fn random_text(len: usize, sigma: u8, seed: u64) -> Vec<u8> {
    assert!(sigma >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| 1 + (rng.next_u32() % sigma as u32) as u8)
        .collect()
}

/// A random block of length `period` tiled to `len` bytes.
pub fn periodic_text(len: usize, sigma: u8, seed: u64, period: usize) -> Vec<u8> {
    assert!(period >= 1);
    if len == 0 {
        return Vec::new();
    }
    let block = random_text(period.min(len), sigma, seed);
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let take = block.len().min(len - out.len());
        out.extend_from_slice(&block[..take]);
    }
    out
}
