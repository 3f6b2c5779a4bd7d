//! Per-spec and per-notation metrics: specification length, token
//! Levenshtein distance, compression distance, remoteness and sprawl.

mod compress;
mod levenshtein;
mod matrix;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

pub use compress::{compress, compression_distance, CompressionAlgorithm, CompressorConfig};
pub use levenshtein::{edit_script, levenshtein, token_levenshtein, Edit, EditKind};
pub use matrix::{distance_matrix, remoteness, remoteness_all, sprawl, DistanceMatrix, MetricId};

pub(crate) use matrix::intern_lexemes;

use crate::error::Result;
use crate::gallery::{Gallery, Spec};
use crate::stats;
use crate::tokenizer::vocabulary;

/// UTF-8 byte length of the normalized text.
pub fn spec_length(spec: &Spec) -> usize {
    spec.byte_length
}

/// Median spec length over a notation's examples.
pub fn median_spec_length(gallery: &Gallery, notation_id: &str) -> Result<f64> {
    let lengths: Vec<f64> = gallery
        .specs(notation_id)?
        .iter()
        .map(|s| spec_length(s) as f64)
        .collect();
    Ok(stats::median(&lengths).unwrap_or(0.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NotationSummary {
    pub notation_id: String,
    pub median_spec_length: f64,
    /// `None` for notations with fewer than two examples.
    pub sprawl: Option<f64>,
    pub remoteness: IndexMap<String, f64>,
    pub vocabulary_size: usize,
}

/// Summary over `matrix`, which must belong to `notation_id`.
pub fn notation_summary(
    gallery: &Gallery,
    notation_id: &str,
    matrix: &DistanceMatrix,
) -> Result<NotationSummary> {
    let (sprawl, remoteness) = if matrix.n() >= 2 {
        let values = remoteness_all(matrix)?;
        (
            Some(sprawl(matrix)?),
            matrix.examples.iter().cloned().zip(values).collect(),
        )
    } else {
        (None, IndexMap::new())
    };
    Ok(NotationSummary {
        notation_id: notation_id.to_string(),
        median_spec_length: median_spec_length(gallery, notation_id)?,
        sprawl,
        remoteness,
        vocabulary_size: vocabulary(gallery, notation_id)?.unique_count,
    })
}
