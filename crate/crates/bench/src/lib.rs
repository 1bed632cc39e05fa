//! Shared corpus setup for the criterion benchmarks.

use saca_core::corpus::{fibonacci_word, periodic_text, random_text};
use saca_core::{SentinelPolicy, Text};

/// The benchmark inputs: name plus terminated text.
pub fn standard_corpora(len: usize) -> Vec<(String, Text)> {
    let raw = [
        ("fibonacci".to_string(), fibonacci_word(len)),
        ("random-4".to_string(), random_text(len, 4, 41)),
        ("random-26".to_string(), random_text(len, 26, 42)),
        ("periodic-256".to_string(), periodic_text(len, 16, 43, 256)),
    ];
    raw.into_iter()
        .map(|(name, bytes)| (name, Text::new(&bytes, SentinelPolicy::Strict).unwrap()))
        .collect()
}
