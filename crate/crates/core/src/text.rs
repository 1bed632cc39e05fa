//! Input texts with a guaranteed unique minimal terminal symbol.
//!
//! Every algorithm in this crate assumes that the last symbol of the text is
//! strictly smaller than all other symbols. That makes all suffixes pairwise
//! comparable without bounds checks and gives every suffix a well-defined
//! next smaller suffix.

use crate::cell::Cell;
use crate::error::Error;

/// How raw bytes are turned into a terminated symbol sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SentinelPolicy {
    /// Append a 0 byte as terminator; the input must not contain NUL bytes.
    /// Symbols stay 8 bits wide.
    Strict,
    /// Shift every byte up by one and append 0, so arbitrary binary input is
    /// accepted at the cost of 16-bit symbols.
    Remap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Symbols {
    Bytes(Vec<u8>),
    Wide(Vec<u16>),
}

/// A terminated symbol sequence of length `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    pub(crate) symbols: Symbols,
}

impl Text {
    /// Builds a text from raw bytes under the given sentinel policy. The
    /// result has length `raw.len() + 1`.
    pub fn new(raw: &[u8], policy: SentinelPolicy) -> Result<Self, Error> {
        if raw.len() >= u64::MAX_TEXT_LEN {
            return Err(Error::InputTooLarge(raw.len()));
        }
        let symbols = match policy {
            SentinelPolicy::Strict => {
                if let Some(pos) = raw.iter().position(|&b| b == 0) {
                    return Err(Error::InputContainsNul(pos));
                }
                let mut syms = Vec::with_capacity(raw.len() + 1);
                syms.extend_from_slice(raw);
                syms.push(0);
                Symbols::Bytes(syms)
            }
            SentinelPolicy::Remap => {
                let mut syms = Vec::with_capacity(raw.len() + 1);
                syms.extend(raw.iter().map(|&b| b as u16 + 1));
                syms.push(0);
                Symbols::Wide(syms)
            }
        };
        Ok(Text { symbols })
    }

    /// Number of symbols including the terminator.
    pub fn len(&self) -> usize {
        match &self.symbols {
            Symbols::Bytes(s) => s.len(),
            Symbols::Wide(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false // the terminator is always present
    }

    /// Length of the original input, i.e. `len() - 1`.
    pub fn original_len(&self) -> usize {
        self.len() - 1
    }

    pub fn symbols(&self) -> &Symbols {
        &self.symbols
    }

    pub fn symbol(&self, i: usize) -> u16 {
        match &self.symbols {
            Symbols::Bytes(s) => s[i] as u16,
            Symbols::Wide(s) => s[i],
        }
    }

    /// Widened copy of the symbols, handy for the oracle helpers.
    pub fn to_wide(&self) -> Vec<u16> {
        match &self.symbols {
            Symbols::Bytes(s) => s.iter().map(|&b| b as u16).collect(),
            Symbols::Wide(s) => s.clone(),
        }
    }

    /// Recovers the raw input bytes (inverse of [`Text::new`]).
    pub fn to_raw_bytes(&self) -> Vec<u8> {
        match &self.symbols {
            Symbols::Bytes(s) => s[..s.len() - 1].to_vec(),
            Symbols::Wide(s) => s[..s.len() - 1].iter().map(|&c| (c - 1) as u8).collect(),
        }
    }

    /// Checks the terminator invariant: the last symbol is a strict unique
    /// minimum. Texts built through [`Text::new`] always satisfy this.
    pub fn has_valid_sentinel(&self) -> bool {
        let n = self.len();
        let last = self.symbol(n - 1);
        (0..n - 1).all(|i| self.symbol(i) > last)
    }
}

/// Cell width of the working arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexWidth {
    W32,
    W64,
}

impl IndexWidth {
    pub fn max_text_len(self) -> usize {
        match self {
            IndexWidth::W32 => u32::MAX_TEXT_LEN,
            IndexWidth::W64 => u64::MAX_TEXT_LEN,
        }
    }

    pub fn bytes_per_cell(self) -> usize {
        match self {
            IndexWidth::W32 => 4,
            IndexWidth::W64 => 8,
        }
    }
}

/// Smallest width whose reserved values still fit next to `n` positions.
pub fn choose_width(n: usize) -> Result<IndexWidth, Error> {
    if n <= u32::MAX_TEXT_LEN {
        Ok(IndexWidth::W32)
    } else if n <= u64::MAX_TEXT_LEN {
        Ok(IndexWidth::W64)
    } else {
        Err(Error::InputTooLarge(n))
    }
}
