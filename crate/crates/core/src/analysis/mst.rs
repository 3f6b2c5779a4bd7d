use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::DistanceMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreeEdge {
    pub example_a: String,
    pub example_b: String,
    /// Canonical indices, `index_a < index_b`.
    pub index_a: usize,
    pub index_b: usize,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpanningTree {
    pub notation_id: String,
    /// In the order Kruskal accepted them.
    pub edges: Vec<TreeEdge>,
    pub total_weight: f64,
}

struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Minimum spanning tree of the complete graph over the matrix.
/// Equal weights are taken in lexicographic `(i, j)` order.
pub fn mst(matrix: &DistanceMatrix) -> Result<SpanningTree> {
    let n = matrix.n();
    if n < 2 {
        return Err(Error::DegenerateGallery(n));
    }
    let mut candidates: Vec<(f64, usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (matrix.get(i, j), i, j))
        .collect();
    candidates.sort_by(|x, y| x.0.total_cmp(&y.0).then((x.1, x.2).cmp(&(y.1, y.2))));

    let mut sets = DisjointSet::new(n);
    let mut edges = Vec::with_capacity(n - 1);
    for (weight, i, j) in candidates {
        if sets.union(i, j) {
            edges.push(TreeEdge {
                example_a: matrix.examples[i].clone(),
                example_b: matrix.examples[j].clone(),
                index_a: i,
                index_b: j,
                weight,
            });
            if edges.len() == n - 1 {
                break;
            }
        }
    }
    let total_weight = edges.iter().map(|e| e.weight).sum();
    Ok(SpanningTree {
        notation_id: matrix.notation_id.clone(),
        edges,
        total_weight,
    })
}
