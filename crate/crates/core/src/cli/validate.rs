use std::io::Write;
use std::path::Path;

use super::{EXIT_DOMAIN, EXIT_ENVIRONMENT, EXIT_OK};
use crate::gallery::{load_gallery, LoadError};
use crate::metrics::median_spec_length;
use crate::tokenizer::vocabulary;

pub(super) fn cmd_validate(root: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let gallery = match load_gallery(root) {
        Ok(g) => g,
        Err(LoadError::Invalid(violations)) => {
            let _ = writeln!(
                err,
                "{} violation(s) in {}:",
                violations.len(),
                root.display()
            );
            for v in &violations {
                let _ = writeln!(err, "  {v}");
            }
            return EXIT_DOMAIN;
        }
        Err(e @ LoadError::Io { .. }) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ENVIRONMENT;
        }
    };

    let _ = writeln!(out, "dataset: {}", gallery.dataset_name());
    let _ = writeln!(
        out,
        "{:<16} {:<12} {:<12} {:<20} {:>12} {:>10}",
        "notation", "language", "tokenizer", "normalizer", "median_bytes", "vocabulary"
    );
    for notation in gallery.notations() {
        let median = median_spec_length(&gallery, &notation.id).unwrap_or(0.0);
        let vocab = vocabulary(&gallery, &notation.id)
            .map(|v| v.unique_count)
            .unwrap_or(0);
        let _ = writeln!(
            out,
            "{:<16} {:<12} {:<12} {:<20} {:>12} {:>10}",
            notation.id,
            notation.language_id,
            notation.tokenizer_id,
            notation.normalizer.kind.as_str(),
            median,
            vocab
        );
    }
    let images = gallery
        .examples()
        .iter()
        .filter(|e| gallery.image(e).is_some())
        .count();
    let _ = writeln!(out, "images: {images}/{}", gallery.examples().len());
    let _ = writeln!(
        out,
        "{} notations × {} examples, complete",
        gallery.notations().len(),
        gallery.examples().len()
    );
    let _ = writeln!(out, "content hash: {}", gallery.content_hash());
    EXIT_OK
}
