use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::compress::{compression_distance_with, CompressorConfig};
use super::levenshtein::levenshtein;
use crate::error::{Error, Result};
use crate::gallery::Gallery;
use crate::stats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricId {
    Cd,
    TokenLd,
}

impl MetricId {
    pub const ALL: [MetricId; 2] = [MetricId::Cd, MetricId::TokenLd];

    pub fn as_str(self) -> &'static str {
        match self {
            MetricId::Cd => "cd",
            MetricId::TokenLd => "token_ld",
        }
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MetricId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cd" => Ok(MetricId::Cd),
            "token_ld" => Ok(MetricId::TokenLd),
            other => Err(Error::UnknownMetric(other.to_string())),
        }
    }
}

/// Symmetric, zero-diagonal, non-negative pairwise distances over one
/// notation's examples in canonical order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    pub notation_id: String,
    pub metric_id: MetricId,
    pub examples: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

impl DistanceMatrix {
    /// Fills the strict upper triangle from `pair(i, j)` (always `i < j`),
    /// mirrors it and zeroes the diagonal. Cells are computed in parallel
    /// and placed by index.
    pub fn from_pairs<F>(
        notation_id: &str,
        metric_id: MetricId,
        examples: Vec<String>,
        pair: F,
    ) -> Result<Self>
    where
        F: Fn(usize, usize) -> Result<f64> + Sync,
    {
        let n = examples.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let cells: Vec<f64> = pairs
            .par_iter()
            .map(|&(i, j)| {
                pair(i, j).map_err(|e| Error::Pair {
                    i,
                    j,
                    source: Box::new(e),
                })
            })
            .collect::<Result<_>>()?;

        let mut values = vec![vec![0.0; n]; n];
        for (&(i, j), &v) in pairs.iter().zip(&cells) {
            values[i][j] = v;
            values[j][i] = v;
        }
        let matrix = Self {
            notation_id: notation_id.to_string(),
            metric_id,
            examples,
            values,
        };
        matrix.check()?;
        Ok(matrix)
    }

    pub fn n(&self) -> usize {
        self.examples.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i][j]
    }

    /// Strict upper triangle, row-major.
    pub fn upper_triangle(&self) -> Vec<f64> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.values[i][j])
            .collect()
    }

    /// Verifies shape, symmetry, zero diagonal and finite non-negative entries.
    pub fn check(&self) -> Result<()> {
        let n = self.n();
        if self.values.len() != n || self.values.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!(
                "{}/{} matrix is not {n}x{n}",
                self.notation_id, self.metric_id
            )));
        }
        for i in 0..n {
            if self.values[i][i] != 0.0 {
                return Err(Error::ShapeMismatch(format!("non-zero diagonal at {i}")));
            }
            for j in 0..n {
                let v = self.values[i][j];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::ShapeMismatch(format!(
                        "invalid entry {v} at ({i}, {j})"
                    )));
                }
                if v != self.values[j][i] {
                    return Err(Error::ShapeMismatch(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }
}

/// Pairwise distances for one notation.
///
/// For `cd` the lower-indexed example's text comes first in the
/// concatenation, which makes the matrix symmetric by construction.
pub fn distance_matrix(
    gallery: &Gallery,
    notation_id: &str,
    metric_id: MetricId,
    compressor: &CompressorConfig,
) -> Result<DistanceMatrix> {
    let examples = gallery.examples().to_vec();
    match metric_id {
        MetricId::Cd => {
            compressor.check_available()?;
            let specs = gallery.specs(notation_id)?;
            let singles: Vec<usize> = specs
                .par_iter()
                .map(|s| compressor.compressed_len(s.normalized_text.as_bytes()))
                .collect::<Result<_>>()?;
            DistanceMatrix::from_pairs(notation_id, metric_id, examples, |i, j| {
                compression_distance_with(
                    specs[i].normalized_text.as_bytes(),
                    specs[j].normalized_text.as_bytes(),
                    singles[i],
                    singles[j],
                    compressor,
                )
            })
        }
        MetricId::TokenLd => {
            let interned = intern_lexemes(gallery, notation_id)?;
            DistanceMatrix::from_pairs(notation_id, metric_id, examples, |i, j| {
                Ok(levenshtein(&interned[i], &interned[j]) as f64)
            })
        }
    }
}

/// Lexeme sequences of a notation mapped to dense ids, comments excluded.
pub(crate) fn intern_lexemes(gallery: &Gallery, notation_id: &str) -> Result<Vec<Vec<u32>>> {
    let streams = gallery.token_streams(notation_id)?;
    let mut ids: HashMap<&str, u32> = HashMap::new();
    Ok(streams
        .iter()
        .map(|s| {
            s.lexemes()
                .map(|lex| {
                    let next = ids.len() as u32;
                    *ids.entry(lex).or_insert(next)
                })
                .collect()
        })
        .collect())
}

/// Median of row `example_index`, diagonal excluded.
pub fn remoteness(matrix: &DistanceMatrix, example_index: usize) -> Result<f64> {
    let n = matrix.n();
    if n < 2 {
        return Err(Error::DegenerateGallery(n));
    }
    if example_index >= n {
        return Err(Error::InvalidArgument(format!(
            "example index {example_index} out of range for {n} examples"
        )));
    }
    let row: Vec<f64> = (0..n)
        .filter(|&j| j != example_index)
        .map(|j| matrix.values[example_index][j])
        .collect();
    Ok(stats::median(&row).expect("n >= 2"))
}

/// Remoteness of every example in canonical order.
pub fn remoteness_all(matrix: &DistanceMatrix) -> Result<Vec<f64>> {
    (0..matrix.n()).map(|i| remoteness(matrix, i)).collect()
}

/// Median over the strict upper triangle.
pub fn sprawl(matrix: &DistanceMatrix) -> Result<f64> {
    let n = matrix.n();
    if n < 2 {
        return Err(Error::DegenerateGallery(n));
    }
    Ok(stats::median(&matrix.upper_triangle()).expect("n >= 2"))
}
