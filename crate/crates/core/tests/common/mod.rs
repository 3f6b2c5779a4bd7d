#![allow(dead_code)]

pub mod oracle;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use notascope::gallery::{GalleryConfig, NormalizerKind, NormalizerSpec, NotationConfig};
use notascope::tokenizer::TokenizerRegistry;
use notascope::Gallery;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn sample_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../gallery/sample")
}

pub fn notation(
    id: &str,
    language: &str,
    ext: &str,
    tokenizer: &str,
    normalizer: NormalizerKind,
) -> NotationConfig {
    NotationConfig {
        id: id.into(),
        language_id: language.into(),
        file_extension: ext.into(),
        tokenizer_id: tokenizer.into(),
        normalizer: NormalizerSpec::of(normalizer),
    }
}

pub fn config(notations: Vec<NotationConfig>, examples: &[&str]) -> GalleryConfig {
    GalleryConfig {
        dataset_name: "test".into(),
        examples: examples.iter().map(|s| s.to_string()).collect(),
        notations,
    }
}

/// Writes `gallery.json` and each `(notation, example, text)` cell.
pub fn write_gallery(root: &Path, config: &GalleryConfig, cells: &[(&str, &str, &str)]) {
    std::fs::create_dir_all(root).unwrap();
    std::fs::write(
        root.join("gallery.json"),
        serde_json::to_string_pretty(config).unwrap(),
    )
    .unwrap();
    for (n, e, text) in cells {
        let ext = config
            .notations
            .iter()
            .find(|c| c.id == *n)
            .unwrap()
            .file_extension
            .trim_start_matches('.');
        let dir = root.join(n);
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join(format!("{e}.{ext}")), text).unwrap();
    }
}

/// In-memory gallery of generic-tokenized notations with the given texts,
/// indexed `[notation][example]`.
pub fn gallery_from(texts: &[Vec<String>]) -> Gallery {
    let notations: Vec<NotationConfig> = (0..texts.len())
        .map(|i| {
            notation(
                &format!("n{i}"),
                "text",
                "txt",
                "generic",
                NormalizerKind::None,
            )
        })
        .collect();
    let examples: Vec<String> = (0..texts[0].len()).map(|j| format!("e{j}")).collect();
    let cfg = GalleryConfig {
        dataset_name: "test".into(),
        examples: examples.clone(),
        notations,
    };
    let mut cells = BTreeMap::new();
    for (i, row) in texts.iter().enumerate() {
        for (j, text) in row.iter().enumerate() {
            cells.insert((format!("n{i}"), examples[j].clone()), text.clone());
        }
    }
    Gallery::from_texts(cfg, &cells, TokenizerRegistry::builtin()).unwrap()
}

const CALLS: &[&str] = &[
    "geom_point",
    "geom_line",
    "geom_bar",
    "geom_area",
    "geom_boxplot",
    "geom_histogram",
    "facet_wrap",
    "facet_grid",
    "scale_x_log10",
    "scale_colour_brewer",
    "coord_flip",
    "theme_minimal",
    "labs",
    "stat_summary",
    "geom_smooth",
    "geom_text",
];
const ARGS: &[&str] = &[
    "x = horsepower",
    "y = mpg",
    "colour = origin",
    "fill = cylinders",
    "size = weight",
    "alpha = 0.5",
    "bins = 20",
    "method = \"lm\"",
    "se = FALSE",
    "position = \"dodge\"",
    "ncol = 3",
    "title = \"Cars\"",
    "fun = mean",
    "geom = \"bar\"",
    "label = name",
];

/// A plausible plotting script of roughly `calls` layers.
pub fn synthetic_spec(rng: &mut ChaCha8Rng, calls: usize) -> String {
    let mut out = String::from("library(ggplot2)\n\nggplot(cars, aes(x = horsepower, y = mpg))");
    for _ in 0..calls {
        let call = CALLS.choose(rng).unwrap();
        let argc = rng.random_range(0..=3);
        let args: Vec<&str> = (0..argc).map(|_| *ARGS.choose(rng).unwrap()).collect();
        out.push_str(&format!(" +\n  {call}({})", args.join(", ")));
    }
    out.push('\n');
    out
}

/// Writes a `notations × examples` gallery of synthetic R-like specs, each
/// at most `max_bytes` long.
pub fn write_synthetic_gallery(
    root: &Path,
    notations: usize,
    examples: usize,
    seed: u64,
    max_bytes: usize,
) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let example_ids: Vec<String> = (0..examples).map(|j| format!("ex{j:02}")).collect();
    let notation_cfgs: Vec<NotationConfig> = (0..notations)
        .map(|i| {
            notation(
                &format!("nota{i}"),
                "r",
                "R",
                "r",
                NormalizerKind::BuiltinWhitespace,
            )
        })
        .collect();
    let cfg = GalleryConfig {
        dataset_name: "synthetic".into(),
        examples: example_ids.clone(),
        notations: notation_cfgs,
    };
    std::fs::create_dir_all(root).unwrap();
    std::fs::write(
        root.join("gallery.json"),
        serde_json::to_string_pretty(&cfg).unwrap(),
    )
    .unwrap();
    for i in 0..notations {
        let dir = root.join(format!("nota{i}"));
        std::fs::create_dir_all(&dir).unwrap();
        for e in &example_ids {
            let mut calls = rng.random_range(1..=40);
            let mut text = synthetic_spec(&mut rng, calls);
            while text.len() > max_bytes {
                calls /= 2;
                text = synthetic_spec(&mut rng, calls);
            }
            std::fs::write(dir.join(format!("{e}.R")), text).unwrap();
        }
    }
}

/// All files under `dir`, keyed by relative path.
pub fn read_tree(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path
                    .strip_prefix(dir)
                    .unwrap()
                    .to_string_lossy()
                    .into_owned();
                out.insert(rel, std::fs::read(&path).unwrap());
            }
        }
    }
    out
}

/// Runs the CLI in-process, returning (exit code, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("notascope").chain(args.iter().copied());
    let code = notascope::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

pub fn matrix(values: Vec<Vec<f64>>) -> notascope::metrics::DistanceMatrix {
    let n = values.len();
    let m = notascope::metrics::DistanceMatrix {
        notation_id: "n".into(),
        metric_id: notascope::metrics::MetricId::Cd,
        examples: (0..n).map(|i| format!("e{i}")).collect(),
        values,
    };
    m.check().unwrap();
    m
}

/// Symmetric matrix with the strict upper triangle filled row-major.
pub fn matrix_from_upper(n: usize, upper: &[f64]) -> notascope::metrics::DistanceMatrix {
    let mut values = vec![vec![0.0; n]; n];
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    for ((i, j), &v) in pairs.zip(upper) {
        values[i][j] = v;
        values[j][i] = v;
    }
    matrix(values)
}

/// Random valid dissimilarity matrix with integer entries in `1..=max`.
pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    n: usize,
    max: u32,
) -> notascope::metrics::DistanceMatrix {
    let upper: Vec<f64> = (0..n * (n - 1) / 2)
        .map(|_| rng.random_range(1..=max) as f64)
        .collect();
    matrix_from_upper(n, &upper)
}
