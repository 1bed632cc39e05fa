//! Suffix array construction by grouping refinement.
//!
//! The construction runs in three steps over the previous-smaller-suffix
//! tree of the text:
//!
//! 1. **Initialisation** computes the parent array with last-child flags and
//!    buckets all suffixes by first symbol.
//! 2. **Phase I** ([`phase1`]) refines the buckets until the suffixes in
//!    every group share their full Lyndon prefix.
//! 3. **Phase II** ([`phase2`]) expands the refined grouping into the suffix
//!    array with a cache-friendly breadth-first insertion.
//!
//! Working arrays use 32-bit cells when the text allows it and 64-bit cells
//! otherwise; [`suffix_array`] picks automatically. The [`oracles`] module
//! holds deliberately naive reference implementations for testing, and
//! [`corpus`] provides deterministic input generators.
//!
//! ```
//! use saca_core::{suffix_array, SentinelPolicy, Text};
//!
//! let text = Text::new(b"abab", SentinelPolicy::Strict).unwrap();
//! let sa = suffix_array(&text);
//! assert_eq!(sa.to_vec(), vec![4, 2, 0, 3, 1]);
//! ```

#[cfg(not(target_pointer_width = "64"))]
compile_error!("this crate assumes 64-bit pointers for its index arithmetic");

pub mod cell;
pub mod corpus;
mod error;
pub mod lyndon;
pub mod oracles;
pub mod phase1;
pub mod phase2;
pub mod pipeline;
pub mod text;
mod track;

pub use error::Error;
pub use pipeline::{
    effective_width, suffix_array, suffix_array_with_stats, verify_suffix_array, BuildConfig,
    RunStats, SuffixArray, DEFAULT_QUEUE_CAPACITY,
};
pub use text::{choose_width, IndexWidth, SentinelPolicy, Symbols, Text};
