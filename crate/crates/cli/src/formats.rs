//! Suffix array file formats: fixed-width little-endian integers without a
//! header, or one decimal index per line.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use clap::ValueEnum;
use saca_core::SuffixArray;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum SaFormat {
    /// Pick by index range when writing, by file size when reading.
    #[default]
    Auto,
    /// Little-endian u32 values, no header.
    Raw32,
    /// Little-endian u64 values, no header.
    Raw64,
    /// One decimal index per line, newline-terminated.
    Text,
}

/// Largest original input a raw32 file may describe (one value and one flag
/// bit per cell stay reserved internally).
pub const RAW32_MAX_LEN: usize = (1usize << 31) - 3;

pub fn write_sa(path: &Path, sa: &SuffixArray, format: SaFormat) -> std::io::Result<()> {
    // entry 0 is always the terminator position; external files carry the
    // original byte positions only
    debug_assert_eq!(sa.get(0), sa.len() - 1);
    let m = sa.len() - 1;
    let format = match format {
        SaFormat::Auto => {
            if m <= RAW32_MAX_LEN {
                SaFormat::Raw32
            } else {
                SaFormat::Raw64
            }
        }
        f => f,
    };
    let mut out = BufWriter::new(File::create(path)?);
    match format {
        SaFormat::Raw32 => {
            for idx in sa.iter().skip(1) {
                out.write_all(&(idx as u32).to_le_bytes())?;
            }
        }
        SaFormat::Raw64 => {
            for idx in sa.iter().skip(1) {
                out.write_all(&(idx as u64).to_le_bytes())?;
            }
        }
        SaFormat::Text => {
            for idx in sa.iter().skip(1) {
                writeln!(out, "{idx}")?;
            }
        }
        SaFormat::Auto => unreachable!(),
    }
    out.flush()
}

pub enum ReadError {
    Io(std::io::Error),
    /// Wrong entry count or unparseable contents.
    Malformed(String),
}

impl From<std::io::Error> for ReadError {
    fn from(e: std::io::Error) -> Self {
        ReadError::Io(e)
    }
}

/// Reads a suffix array file of exactly `m` entries.
pub fn read_sa(path: &Path, m: usize, format: SaFormat) -> Result<Vec<u64>, ReadError> {
    let size = std::fs::metadata(path)?.len();
    let format = match format {
        SaFormat::Auto => {
            if size == 4 * m as u64 {
                SaFormat::Raw32
            } else if size == 8 * m as u64 {
                SaFormat::Raw64
            } else {
                SaFormat::Text
            }
        }
        f => f,
    };
    let file = File::open(path)?;
    let mut entries = Vec::with_capacity(m);
    match format {
        SaFormat::Raw32 => {
            if size != 4 * m as u64 {
                return Err(ReadError::Malformed(format!(
                    "expected {m} raw32 entries ({} bytes), file has {size} bytes",
                    4 * m
                )));
            }
            let mut reader = BufReader::new(file);
            let mut buf = [0u8; 4];
            for _ in 0..m {
                reader.read_exact(&mut buf)?;
                entries.push(u32::from_le_bytes(buf) as u64);
            }
        }
        SaFormat::Raw64 => {
            if size != 8 * m as u64 {
                return Err(ReadError::Malformed(format!(
                    "expected {m} raw64 entries ({} bytes), file has {size} bytes",
                    8 * m
                )));
            }
            let mut reader = BufReader::new(file);
            let mut buf = [0u8; 8];
            for _ in 0..m {
                reader.read_exact(&mut buf)?;
                entries.push(u64::from_le_bytes(buf));
            }
        }
        SaFormat::Text => {
            for line in BufReader::new(file).lines() {
                let line = line?;
                if line.is_empty() {
                    continue;
                }
                let v: u64 = line
                    .trim()
                    .parse()
                    .map_err(|_| ReadError::Malformed(format!("bad index line {line:?}")))?;
                entries.push(v);
            }
            if entries.len() != m {
                return Err(ReadError::Malformed(format!(
                    "expected {m} entries, file has {}",
                    entries.len()
                )));
            }
        }
        SaFormat::Auto => unreachable!(),
    }
    Ok(entries)
}

/// FNV-1a over the little-endian 64-bit widening of every index, so equal
/// index sequences hash equally regardless of cell width.
pub fn sa_checksum(sa: &SuffixArray) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for idx in sa.iter() {
        for b in (idx as u64).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}
