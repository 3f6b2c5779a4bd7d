use indexmap::IndexMap;
use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::DistanceMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Embedding2D {
    pub notation_id: String,
    /// Example id to `[x, y]`, in canonical order.
    pub points: IndexMap<String, [f64; 2]>,
    /// Σ(d - ê)² / Σd² over unordered pairs; 0 when all distances are 0.
    pub stress: f64,
}

/// Classical (Torgerson) MDS into the plane.
pub fn mds_embed(matrix: &DistanceMatrix) -> Result<Embedding2D> {
    let n = matrix.n();
    if n < 2 {
        return Err(Error::DegenerateGallery(n));
    }
    let coords = classical_mds(&matrix.values, 2);
    let stress = stress(&matrix.values, &coords);
    let points = matrix
        .examples
        .iter()
        .cloned()
        .zip(coords.iter().map(|c| [c[0], c[1]]))
        .collect();
    Ok(Embedding2D {
        notation_id: matrix.notation_id.clone(),
        points,
        stress,
    })
}

/// Coordinates (`n` rows of `dims` values) from a square distance matrix.
///
/// B = -½·J·D²·J is eigendecomposed; axis k is the k-th largest
/// eigenvector scaled by √max(λ, 0). Each axis is oriented so the first
/// example with a non-negligible coordinate on it is positive.
pub fn classical_mds(distances: &[Vec<f64>], dims: usize) -> Vec<Vec<f64>> {
    let n = distances.len();
    let squared = DMatrix::from_fn(n, n, |i, j| distances[i][j] * distances[i][j]);
    let row_means: Vec<f64> = (0..n).map(|i| squared.row(i).sum() / n as f64).collect();
    let col_means: Vec<f64> = (0..n).map(|j| squared.column(j).sum() / n as f64).collect();
    let grand = row_means.iter().sum::<f64>() / n as f64;
    let b = DMatrix::from_fn(n, n, |i, j| {
        -0.5 * (squared[(i, j)] - row_means[i] - col_means[j] + grand)
    });
    // exact symmetry for the eigensolver
    let b = (&b + b.transpose()) * 0.5;

    let eigen = SymmetricEigen::new(b);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| {
        eigen.eigenvalues[y]
            .total_cmp(&eigen.eigenvalues[x])
            .then(x.cmp(&y))
    });

    let mut coords = vec![vec![0.0; dims]; n];
    for (axis, &k) in order.iter().take(dims).enumerate() {
        let scale = eigen.eigenvalues[k].max(0.0).sqrt();
        let column: Vec<f64> = (0..n).map(|i| eigen.eigenvectors[(i, k)] * scale).collect();
        let largest = column.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let flip = column
            .iter()
            .find(|v| v.abs() > largest * 1e-9)
            .is_some_and(|v| *v < 0.0);
        for (i, v) in column.into_iter().enumerate() {
            let v = if flip { -v } else { v };
            // avoid serializing -0.0
            coords[i][axis] = if v == 0.0 { 0.0 } else { v };
        }
    }
    coords
}

fn stress(distances: &[Vec<f64>], coords: &[Vec<f64>]) -> f64 {
    let n = distances.len();
    let (mut num, mut den) = (0.0, 0.0);
    for i in 0..n {
        for j in i + 1..n {
            let embedded = coords[i]
                .iter()
                .zip(&coords[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            let d = distances[i][j];
            num += (d - embedded) * (d - embedded);
            den += d * d;
        }
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}
