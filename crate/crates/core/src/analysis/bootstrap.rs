use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gallery::Gallery;
use crate::metrics::{intern_lexemes, DistanceMatrix};
use crate::stats;

/// Identifies the resampling generator in exported metadata.
pub const BOOTSTRAP_PRNG: &str =
    "ChaCha8 (rand_chacha 0.9) seeded from u64, stream = sample index; indices via rand 0.9 random_range";

pub const DEFAULT_SAMPLE_COUNT: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BootstrapMetric {
    MedianSpecLength,
    VocabularySize,
    Sprawl,
}

impl BootstrapMetric {
    pub const ALL: [BootstrapMetric; 3] = [
        BootstrapMetric::MedianSpecLength,
        BootstrapMetric::VocabularySize,
        BootstrapMetric::Sprawl,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BootstrapMetric::MedianSpecLength => "median_spec_length",
            BootstrapMetric::VocabularySize => "vocabulary_size",
            BootstrapMetric::Sprawl => "sprawl",
        }
    }
}

impl fmt::Display for BootstrapMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BootstrapMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::UnknownMetric(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Quantiles {
    pub p2_5: f64,
    pub p25: f64,
    pub p50: f64,
    pub p75: f64,
    pub p97_5: f64,
}

impl Quantiles {
    pub fn of(samples: &[f64]) -> Self {
        let mut sorted = samples.to_vec();
        sorted.sort_by(f64::total_cmp);
        let q = |p| stats::quantile_sorted(&sorted, p);
        Self {
            p2_5: q(0.025),
            p25: q(0.25),
            p50: q(0.5),
            p75: q(0.75),
            p97_5: q(0.975),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BootstrapResult {
    pub notation_id: String,
    pub metric_name: BootstrapMetric,
    pub sample_count: usize,
    pub seed: u64,
    pub samples: Vec<f64>,
    pub quantiles: Quantiles,
}

enum Statistic<'a> {
    MedianLength(Vec<f64>),
    Vocabulary { sets: Vec<Vec<u32>>, ids: usize },
    Sprawl(&'a DistanceMatrix),
}

impl Statistic<'_> {
    fn evaluate(&self, picks: &[usize]) -> f64 {
        match self {
            Statistic::MedianLength(lengths) => {
                let resampled: Vec<f64> = picks.iter().map(|&i| lengths[i]).collect();
                stats::median(&resampled).unwrap_or(0.0)
            }
            Statistic::Vocabulary { sets, ids } => {
                let mut seen = vec![false; *ids];
                let mut count = 0;
                for &i in picks {
                    for &id in &sets[i] {
                        if !seen[id as usize] {
                            seen[id as usize] = true;
                            count += 1;
                        }
                    }
                }
                count as f64
            }
            Statistic::Sprawl(matrix) => {
                let mut pairs = Vec::with_capacity(picks.len() * picks.len().saturating_sub(1) / 2);
                for (a, &i) in picks.iter().enumerate() {
                    for &j in &picks[a + 1..] {
                        // two slots holding the same original example
                        pairs.push(if i == j { 0.0 } else { matrix.get(i, j) });
                    }
                }
                stats::median(&pairs).unwrap_or(0.0)
            }
        }
    }
}

/// Draws `n` indices with replacement for sample `index`.
pub(crate) fn resample(n: usize, seed: u64, index: usize) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    (0..n).map(|_| rng.random_range(0..n)).collect()
}

/// Nonparametric bootstrap of a notation aggregate.
///
/// Each sample draws `n` of the notation's `n` examples with replacement
/// and recomputes the aggregate on that multiset. Sprawl needs the
/// notation's distance matrix; pairs of slots that hold the same example
/// contribute 0, and a single-example resample has sprawl 0.
pub fn bootstrap(
    gallery: &Gallery,
    notation_id: &str,
    metric: BootstrapMetric,
    sample_count: usize,
    seed: u64,
    distances: Option<&DistanceMatrix>,
) -> Result<BootstrapResult> {
    if sample_count == 0 {
        return Err(Error::InvalidArgument(
            "sample_count must be at least 1".into(),
        ));
    }
    let specs = gallery.specs(notation_id)?;
    let n = specs.len();

    let statistic = match metric {
        BootstrapMetric::MedianSpecLength => {
            Statistic::MedianLength(specs.iter().map(|s| s.byte_length as f64).collect())
        }
        BootstrapMetric::VocabularySize => {
            let mut sets = intern_lexemes(gallery, notation_id)?;
            for set in &mut sets {
                set.sort_unstable();
                set.dedup();
            }
            let ids = sets
                .iter()
                .flatten()
                .map(|&id| id as usize + 1)
                .max()
                .unwrap_or(0);
            Statistic::Vocabulary { sets, ids }
        }
        BootstrapMetric::Sprawl => {
            let matrix = distances.ok_or_else(|| {
                Error::InvalidArgument("sprawl bootstrap needs a distance matrix".into())
            })?;
            if matrix.notation_id != notation_id || matrix.n() != n {
                return Err(Error::ShapeMismatch(format!(
                    "distance matrix for `{}` ({} examples) does not match notation `{notation_id}` ({n} examples)",
                    matrix.notation_id,
                    matrix.n()
                )));
            }
            Statistic::Sprawl(matrix)
        }
    };

    let samples: Vec<f64> = (0..sample_count)
        .into_par_iter()
        .map(|index| statistic.evaluate(&resample(n, seed, index)))
        .collect();
    let quantiles = Quantiles::of(&samples);
    Ok(BootstrapResult {
        notation_id: notation_id.to_string(),
        metric_name: metric,
        sample_count,
        seed,
        samples,
        quantiles,
    })
}
