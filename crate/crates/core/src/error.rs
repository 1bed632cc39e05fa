use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Strict sentinel handling appends a 0 byte, so the input itself must
    /// be NUL-free. Use the remap policy for arbitrary binary data.
    #[error("input contains a NUL byte at offset {0}; use the remap policy for binary data")]
    InputContainsNul(usize),

    #[error("input of {0} bytes exceeds the maximum supported length")]
    InputTooLarge(usize),

    #[error("32-bit indices cannot address a text of {0} symbols")]
    WidthTooSmall(usize),
}
