use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::tokenizer::TokenStream;

/// Unit-cost edit distance between two sequences.
pub fn levenshtein<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let prefix = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    let (a, b) = (&a[prefix..], &b[prefix..]);
    let suffix = a
        .iter()
        .rev()
        .zip(b.iter().rev())
        .take_while(|(x, y)| x == y)
        .count();
    let (a, b) = (&a[..a.len() - suffix], &b[..b.len() - suffix]);

    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if short.is_empty() {
        return long.len();
    }

    let mut row: Vec<usize> = (0..=short.len()).collect();
    for (i, x) in long.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, y) in short.iter().enumerate() {
            let next = (diag + usize::from(x != y))
                .min(row[j] + 1)
                .min(row[j + 1] + 1);
            diag = row[j + 1];
            row[j + 1] = next;
        }
    }
    row[short.len()]
}

/// Edit distance between the lexeme sequences of two streams, comments
/// excluded.
pub fn token_levenshtein(a: &TokenStream, b: &TokenStream) -> usize {
    let a: Vec<&str> = a.lexemes().collect();
    let b: Vec<&str> = b.lexemes().collect();
    levenshtein(&a, &b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EditKind {
    Equal,
    Insert,
    Delete,
    Replace,
}

/// A run of one edit kind. `Replace` runs have equal-length ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edit {
    pub kind: EditKind,
    pub a: Range<usize>,
    pub b: Range<usize>,
}

impl Edit {
    /// Unit operations this run contributes to the edit distance.
    pub fn cost(&self) -> usize {
        match self.kind {
            EditKind::Equal => 0,
            EditKind::Insert => self.b.len(),
            EditKind::Delete | EditKind::Replace => self.a.len(),
        }
    }
}

/// Minimal edit script from `a` to `b` with adjacent runs of the same kind
/// merged. Total [`Edit::cost`] equals [`levenshtein`].
///
/// Backtracking prefers keeping an equal pair, then substitution, then
/// deletion, then insertion.
pub fn edit_script<T: PartialEq>(a: &[T], b: &[T]) -> Vec<Edit> {
    let (n, m) = (a.len(), b.len());
    let w = m + 1;
    let mut dp = vec![0usize; (n + 1) * w];
    for (j, cell) in dp.iter_mut().take(w).enumerate() {
        *cell = j;
    }
    for i in 1..=n {
        dp[i * w] = i;
        for j in 1..=m {
            let sub = dp[(i - 1) * w + j - 1] + usize::from(a[i - 1] != b[j - 1]);
            let del = dp[(i - 1) * w + j] + 1;
            let ins = dp[i * w + j - 1] + 1;
            dp[i * w + j] = sub.min(del).min(ins);
        }
    }

    let mut steps = Vec::with_capacity(n.max(m));
    let (mut i, mut j) = (n, m);
    while i > 0 || j > 0 {
        let here = dp[i * w + j];
        if i > 0 && j > 0 && a[i - 1] == b[j - 1] && here == dp[(i - 1) * w + j - 1] {
            steps.push(EditKind::Equal);
            i -= 1;
            j -= 1;
        } else if i > 0 && j > 0 && here == dp[(i - 1) * w + j - 1] + 1 {
            steps.push(EditKind::Replace);
            i -= 1;
            j -= 1;
        } else if i > 0 && here == dp[(i - 1) * w + j] + 1 {
            steps.push(EditKind::Delete);
            i -= 1;
        } else {
            steps.push(EditKind::Insert);
            j -= 1;
        }
    }
    steps.reverse();

    let mut edits: Vec<Edit> = Vec::new();
    let (mut i, mut j) = (0, 0);
    for kind in steps {
        let (di, dj) = match kind {
            EditKind::Equal | EditKind::Replace => (1, 1),
            EditKind::Delete => (1, 0),
            EditKind::Insert => (0, 1),
        };
        match edits.last_mut() {
            Some(last) if last.kind == kind => {
                last.a.end += di;
                last.b.end += dj;
            }
            _ => edits.push(Edit {
                kind,
                a: i..i + di,
                b: j..j + dj,
            }),
        }
        i += di;
        j += dj;
    }
    edits
}
