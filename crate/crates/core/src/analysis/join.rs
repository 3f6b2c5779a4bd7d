use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gallery::Gallery;
use crate::metrics::{remoteness_all, DistanceMatrix};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JoinRow {
    pub example_id: String,
    pub remoteness_a: f64,
    pub remoteness_b: f64,
    pub length_a: usize,
    pub length_b: usize,
}

/// Per-example remoteness and length of two notations side by side.
/// `matrix_a` and `matrix_b` are the two notations' distance matrices.
pub fn cross_notation_join(
    gallery: &Gallery,
    matrix_a: &DistanceMatrix,
    matrix_b: &DistanceMatrix,
) -> Result<Vec<JoinRow>> {
    if matrix_a.examples != gallery.examples() || matrix_b.examples != gallery.examples() {
        return Err(Error::ShapeMismatch(
            "join inputs must follow the gallery's example order".into(),
        ));
    }
    let specs_a = gallery.specs(&matrix_a.notation_id)?;
    let specs_b = gallery.specs(&matrix_b.notation_id)?;
    let rem_a = remoteness_all(matrix_a)?;
    let rem_b = remoteness_all(matrix_b)?;
    Ok(gallery
        .examples()
        .iter()
        .enumerate()
        .map(|(i, example)| JoinRow {
            example_id: example.clone(),
            remoteness_a: rem_a[i],
            remoteness_b: rem_b[i],
            length_a: specs_a[i].byte_length,
            length_b: specs_b[i].byte_length,
        })
        .collect())
}
