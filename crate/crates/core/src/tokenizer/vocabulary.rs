use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::TokenStream;
use crate::error::Result;
use crate::gallery::Gallery;

/// Distinct-lexeme statistics for one notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VocabularyReport {
    pub notation_id: String,
    pub unique_count: usize,
    /// Usage count `k` to the number of distinct lexemes used exactly `k` times.
    pub frequency_histogram: BTreeMap<usize, usize>,
    pub lexeme_counts: BTreeMap<String, usize>,
}

impl VocabularyReport {
    pub fn total_occurrences(&self) -> usize {
        self.lexeme_counts.values().sum()
    }
}

/// Vocabulary over arbitrary streams. Comments are excluded; lexeme
/// identity is the exact string, independent of token kind.
pub fn vocabulary_of<'a>(
    notation_id: &str,
    streams: impl IntoIterator<Item = &'a TokenStream>,
) -> VocabularyReport {
    let mut lexeme_counts: BTreeMap<String, usize> = BTreeMap::new();
    for stream in streams {
        for lexeme in stream.lexemes() {
            *lexeme_counts.entry(lexeme.to_string()).or_default() += 1;
        }
    }
    let mut frequency_histogram = BTreeMap::new();
    for &count in lexeme_counts.values() {
        *frequency_histogram.entry(count).or_default() += 1;
    }
    VocabularyReport {
        notation_id: notation_id.to_string(),
        unique_count: lexeme_counts.len(),
        frequency_histogram,
        lexeme_counts,
    }
}

pub fn vocabulary(gallery: &Gallery, notation_id: &str) -> Result<VocabularyReport> {
    let streams = gallery.token_streams(notation_id)?;
    Ok(vocabulary_of(notation_id, streams))
}
