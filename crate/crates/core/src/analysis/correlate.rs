use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::DistanceMatrix;
use crate::stats;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    /// `<notation>/<metric>` of each side.
    pub matrix_a: String,
    pub matrix_b: String,
    /// `None` when either triangle has zero variance (including n ≤ 2).
    pub pearson_r: Option<f64>,
    pub n_pairs: usize,
    pub permutations: Option<usize>,
    pub permutation_seed: Option<u64>,
    /// Fraction of label permutations, the identity included, with
    /// |r| at least the observed |r|.
    pub permutation_p: Option<f64>,
}

fn label(m: &DistanceMatrix) -> String {
    format!("{}/{}", m.notation_id, m.metric_id)
}

/// Pearson r over paired strict-upper-triangle entries, optionally with a
/// Mantel-style permutation test that relabels the examples of `b`.
pub fn correlate(
    a: &DistanceMatrix,
    b: &DistanceMatrix,
    permutations: Option<usize>,
    seed: u64,
) -> Result<CorrelationReport> {
    if a.examples != b.examples {
        return Err(Error::ShapeMismatch(format!(
            "{} and {} do not share the same example ordering",
            label(a),
            label(b)
        )));
    }
    let x = a.upper_triangle();
    let y = b.upper_triangle();
    let r = stats::pearson(&x, &y);

    let permutation_p = match (permutations, r) {
        (Some(count), Some(observed)) => {
            let n = b.n();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut labels: Vec<usize> = (0..n).collect();
            let mut y_perm = Vec::with_capacity(y.len());
            let mut extreme = 1; // the identity permutation
            for _ in 0..count {
                labels.shuffle(&mut rng);
                y_perm.clear();
                for i in 0..n {
                    for j in i + 1..n {
                        y_perm.push(b.get(labels[i], labels[j]));
                    }
                }
                if let Some(rp) = stats::pearson(&x, &y_perm) {
                    if rp.abs() >= observed.abs() {
                        extreme += 1;
                    }
                }
            }
            Some(extreme as f64 / (count + 1) as f64)
        }
        _ => None,
    };

    Ok(CorrelationReport {
        matrix_a: label(a),
        matrix_b: label(b),
        pearson_r: r,
        n_pairs: x.len(),
        permutations,
        permutation_seed: permutations.map(|_| seed),
        permutation_p,
    })
}
