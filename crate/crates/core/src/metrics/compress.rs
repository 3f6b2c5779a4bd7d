use std::fmt;
use std::io::Write;
use std::str::FromStr;

use flate2::write::{DeflateEncoder, ZlibEncoder};
use flate2::Compression;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompressionAlgorithm {
    /// DEFLATE with the zlib wrapper (RFC 1950).
    Zlib,
    /// Raw DEFLATE stream (RFC 1951).
    Deflate,
    /// LZMA2 in the xz container.
    Lzma,
}

impl CompressionAlgorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            CompressionAlgorithm::Zlib => "zlib",
            CompressionAlgorithm::Deflate => "deflate",
            CompressionAlgorithm::Lzma => "lzma",
        }
    }
}

/// Algorithm and level for every compression-distance computation.
///
/// The default, `zlib:9`, gives CD("geom_point", "geom_line") = 7 and
/// CD("geom_point", "facet_wrap") = 10.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompressorConfig {
    pub algorithm: CompressionAlgorithm,
    pub level: u32,
}

impl Default for CompressorConfig {
    fn default() -> Self {
        Self {
            algorithm: CompressionAlgorithm::Zlib,
            level: 9,
        }
    }
}

impl fmt::Display for CompressorConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.algorithm.as_str(), self.level)
    }
}

impl FromStr for CompressorConfig {
    type Err = Error;

    /// Parses `algorithm[:level]`, e.g. `zlib:9` or `lzma`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, level) = match s.split_once(':') {
            Some((name, level)) => {
                let level = level.parse::<u32>().map_err(|_| {
                    Error::InvalidArgument(format!("bad compressor level in `{s}`"))
                })?;
                (name, Some(level))
            }
            None => (s, None),
        };
        let algorithm = match name {
            "zlib" => CompressionAlgorithm::Zlib,
            "deflate" => CompressionAlgorithm::Deflate,
            "lzma" | "xz" => CompressionAlgorithm::Lzma,
            other => {
                return Err(Error::CompressorUnavailable(format!(
                    "unknown algorithm `{other}` (expected zlib, deflate or lzma)"
                )))
            }
        };
        let level = level.unwrap_or(9);
        if level > 9 {
            return Err(Error::InvalidArgument(format!(
                "compressor level {level} out of range 0..=9"
            )));
        }
        Ok(Self { algorithm, level })
    }
}

impl CompressorConfig {
    /// Fails early when the algorithm is not compiled in.
    pub fn check_available(&self) -> Result<()> {
        match self.algorithm {
            CompressionAlgorithm::Lzma if !cfg!(feature = "lzma") => {
                Err(Error::CompressorUnavailable(
                    "lzma support was not compiled in (enable the `lzma` feature)".into(),
                ))
            }
            _ => Ok(()),
        }
    }

    /// Compressed length of `data` in bytes.
    pub fn compressed_len(&self, data: &[u8]) -> Result<usize> {
        let out = match self.algorithm {
            CompressionAlgorithm::Zlib => {
                let mut enc = ZlibEncoder::new(Vec::new(), Compression::new(self.level));
                enc.write_all(data)?;
                enc.finish()?
            }
            CompressionAlgorithm::Deflate => {
                let mut enc = DeflateEncoder::new(Vec::new(), Compression::new(self.level));
                enc.write_all(data)?;
                enc.finish()?
            }
            CompressionAlgorithm::Lzma => return lzma_len(data, self.level),
        };
        Ok(out.len())
    }
}

#[cfg(feature = "lzma")]
fn lzma_len(data: &[u8], level: u32) -> Result<usize> {
    let mut enc = xz2::write::XzEncoder::new(Vec::new(), level);
    enc.write_all(data)?;
    Ok(enc.finish()?.len())
}

#[cfg(not(feature = "lzma"))]
fn lzma_len(_data: &[u8], _level: u32) -> Result<usize> {
    Err(Error::CompressorUnavailable(
        "lzma support was not compiled in (enable the `lzma` feature)".into(),
    ))
}

/// C(x) under `compressor`.
pub fn compress(data: &[u8], compressor: &CompressorConfig) -> Result<usize> {
    compressor.compressed_len(data)
}

/// `max(0, C(ab) - min(C(a), C(b)))`, concatenating in argument order
/// with no separator.
pub fn compression_distance(a: &[u8], b: &[u8], compressor: &CompressorConfig) -> Result<f64> {
    let ca = compressor.compressed_len(a)?;
    let cb = compressor.compressed_len(b)?;
    compression_distance_with(a, b, ca, cb, compressor)
}

/// As [`compression_distance`] with `C(a)` and `C(b)` already known.
pub(crate) fn compression_distance_with(
    a: &[u8],
    b: &[u8],
    ca: usize,
    cb: usize,
    compressor: &CompressorConfig,
) -> Result<f64> {
    let mut joined = Vec::with_capacity(a.len() + b.len());
    joined.extend_from_slice(a);
    joined.extend_from_slice(b);
    let cab = compressor.compressed_len(&joined)?;
    Ok(cab.saturating_sub(ca.min(cb)) as f64)
}
