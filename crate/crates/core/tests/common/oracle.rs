//! Brute-force reference implementations shared by the test targets.

use std::collections::BTreeSet;

use notascope::analysis::{Dendrogram, Linkage};
use notascope::metrics::DistanceMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::matrix_from_upper;

pub fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

pub fn float_matrix(rng: &mut ChaCha8Rng, n: usize) -> DistanceMatrix {
    let upper: Vec<f64> = (0..n * (n - 1) / 2)
        .map(|_| rng.random_range(0.5..100.0))
        .collect();
    matrix_from_upper(n, &upper)
}

pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Naive agglomeration: linkage recomputed from leaf memberships each step.
pub fn naive_cluster(
    m: &DistanceMatrix,
    linkage: Linkage,
) -> Vec<(BTreeSet<usize>, BTreeSet<usize>, f64)> {
    let n = m.n();
    let mut clusters: Vec<(usize, BTreeSet<usize>)> =
        (0..n).map(|i| (i, BTreeSet::from([i]))).collect();
    let mut out = Vec::new();
    for step in 0..n - 1 {
        let mut best: Option<(f64, (usize, usize), usize, usize)> = None;
        for p in 0..clusters.len() {
            for q in p + 1..clusters.len() {
                let ds: Vec<f64> = clusters[p]
                    .1
                    .iter()
                    .flat_map(|&i| clusters[q].1.iter().map(move |&j| (i, j)))
                    .map(|(i, j)| m.get(i, j))
                    .collect();
                let d = match linkage {
                    Linkage::Average => ds.iter().sum::<f64>() / ds.len() as f64,
                    Linkage::Single => ds.iter().copied().fold(f64::MAX, f64::min),
                    Linkage::Complete => ds.iter().copied().fold(f64::MIN, f64::max),
                };
                let (a, b) = (clusters[p].0, clusters[q].0);
                let key = (a.min(b), a.max(b));
                if best.map_or(true, |(bd, bk, _, _)| d < bd || (d == bd && key < bk)) {
                    best = Some((d, key, p, q));
                }
            }
        }
        let (d, _, p, q) = best.unwrap();
        let right = clusters.remove(q);
        let left = clusters.remove(p);
        out.push((left.1.clone(), right.1.clone(), d));
        let merged: BTreeSet<usize> = left.1.union(&right.1).copied().collect();
        clusters.push((n + step, merged));
    }
    out
}

pub fn leaves_of(d: &Dendrogram, id: usize, n: usize) -> BTreeSet<usize> {
    if id < n {
        return BTreeSet::from([id]);
    }
    let merge = &d.merges[id - n];
    let mut s = leaves_of(d, merge.cluster_a, n);
    s.extend(leaves_of(d, merge.cluster_b, n));
    s
}

/// Decodes a Prüfer sequence into the edges of a labelled tree on `n` nodes.
pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

pub fn brute_force_mst(m: &DistanceMatrix) -> (f64, BTreeSet<(usize, usize)>) {
    let n = m.n();
    if n == 2 {
        return (m.get(0, 1), BTreeSet::from([(0, 1)]));
    }
    let mut best = (f64::MAX, BTreeSet::new());
    let mut seq = vec![0; n - 2];
    loop {
        let edges = prufer_edges(&seq, n);
        let w: f64 = edges.iter().map(|&(a, b)| m.get(a, b)).sum();
        if w < best.0 {
            best = (w, edges.into_iter().collect());
        }
        let mut k = 0;
        while k < seq.len() && seq[k] == n - 1 {
            seq[k] = 0;
            k += 1;
        }
        if k == seq.len() {
            return best;
        }
        seq[k] += 1;
    }
}

pub fn all_multisets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for code in 0..n.pow(n as u32) {
        let mut c = code;
        out.push(
            (0..n)
                .map(|_| {
                    let v = c % n;
                    c /= n;
                    v
                })
                .collect(),
        );
    }
    out
}

/// Every sequence over `alphabet` of length at most `max_len`, shortest first.
pub fn all_sequences(alphabet: &[u8], max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for &c in alphabet {
                let mut t: Vec<u8> = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
