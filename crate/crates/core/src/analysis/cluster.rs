use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::DistanceMatrix;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Linkage {
    /// UPGMA: mean pairwise distance between members.
    #[default]
    Average,
    Single,
    Complete,
}

impl Linkage {
    pub fn as_str(self) -> &'static str {
        match self {
            Linkage::Average => "average",
            Linkage::Single => "single",
            Linkage::Complete => "complete",
        }
    }
}

impl fmt::Display for Linkage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Linkage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "average" | "upgma" => Ok(Linkage::Average),
            "single" => Ok(Linkage::Single),
            "complete" => Ok(Linkage::Complete),
            other => Err(Error::InvalidArgument(format!(
                "unknown linkage `{other}` (expected average, single or complete)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Merge {
    /// The smaller of the two merged cluster ids.
    pub cluster_a: usize,
    pub cluster_b: usize,
    pub height: f64,
    pub new_cluster_id: usize,
    /// Leaves under the new cluster.
    pub size: usize,
}

/// Leaves are clusters `0..n` in canonical example order; the merge at
/// step `s` creates cluster `n + s`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dendrogram {
    pub notation_id: String,
    pub linkage: Linkage,
    pub leaves: Vec<String>,
    pub merges: Vec<Merge>,
}

/// Agglomerative clustering by repeatedly merging the closest pair.
///
/// Ties go to the pair with the smallest `(min id, max id)`. Cluster
/// distances are maintained with the Lance-Williams update of the chosen
/// linkage. Heights must be non-decreasing; a decrease beyond rounding
/// noise is reported as [`Error::NonMonotoneDendrogram`].
pub fn cluster(matrix: &DistanceMatrix, linkage: Linkage) -> Result<Dendrogram> {
    let n = matrix.n();
    if n < 2 {
        return Err(Error::DegenerateGallery(n));
    }

    // Slot i holds one active cluster; merged clusters reuse the lower slot.
    let mut dist = matrix.values.clone();
    let mut ids: Vec<usize> = (0..n).collect();
    let mut sizes = vec![1usize; n];
    let mut active = vec![true; n];
    let mut merges = Vec::with_capacity(n - 1);
    let mut previous = f64::NEG_INFINITY;

    for step in 0..n - 1 {
        let mut best: Option<(f64, usize, usize, usize, usize)> = None;
        for p in (0..n).filter(|&p| active[p]) {
            for q in (p + 1..n).filter(|&q| active[q]) {
                let d = dist[p][q];
                let key = (ids[p].min(ids[q]), ids[p].max(ids[q]));
                let better = match best {
                    None => true,
                    Some((bd, ba, bb, _, _)) => d < bd || (d == bd && key < (ba, bb)),
                };
                if better {
                    best = Some((d, key.0, key.1, p, q));
                }
            }
        }
        let (mut height, a, b, p, q) = best.expect("at least two active clusters");

        let tolerance = 1e-9 * previous.abs().max(1.0);
        if height < previous {
            if height < previous - tolerance {
                return Err(Error::NonMonotoneDendrogram {
                    step,
                    height,
                    previous,
                });
            }
            height = previous;
        }
        previous = height;

        let (sp, sq) = (sizes[p] as f64, sizes[q] as f64);
        for k in (0..n).filter(|&k| active[k] && k != p && k != q) {
            let updated = match linkage {
                Linkage::Average => (sp * dist[p][k] + sq * dist[q][k]) / (sp + sq),
                Linkage::Single => dist[p][k].min(dist[q][k]),
                Linkage::Complete => dist[p][k].max(dist[q][k]),
            };
            dist[p][k] = updated;
            dist[k][p] = updated;
        }
        active[q] = false;
        sizes[p] += sizes[q];
        ids[p] = n + step;

        merges.push(Merge {
            cluster_a: a,
            cluster_b: b,
            height,
            new_cluster_id: n + step,
            size: sizes[p],
        });
    }

    Ok(Dendrogram {
        notation_id: matrix.notation_id.clone(),
        linkage,
        leaves: matrix.examples.clone(),
        merges,
    })
}
