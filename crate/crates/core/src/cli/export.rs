use std::io::Write;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{open, write_output, Format, MetricsArgs};
use crate::analysis::CorrelationReport;
use crate::error::Result;
use crate::manifest::RunManifest;
use crate::metrics::{DistanceMatrix, MetricId};
use crate::Workbench;

pub const CSV_HEADER: [&str; 4] = ["notation", "example", "metric", "value"];
/// `notation` column value of the manifest rows in CSV output.
pub const CSV_MANIFEST_ROW: &str = "#manifest";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsExport {
    pub manifest: RunManifest,
    pub notations: IndexMap<String, NotationMetrics>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NotationMetrics {
    pub language_id: String,
    pub median_spec_length: f64,
    pub vocabulary_size: usize,
    pub spec_lengths: IndexMap<String, usize>,
    /// Keyed by metric id; `None` with fewer than two examples.
    pub sprawl: IndexMap<String, Option<f64>>,
    pub remoteness: IndexMap<String, IndexMap<String, f64>>,
    pub distances: IndexMap<String, DistanceMatrix>,
    pub ld_cd_correlation: CorrelationReport,
}

impl MetricsExport {
    pub fn build(bench: &Workbench, permutations: Option<usize>, seed: u64) -> Result<Self> {
        let gallery = bench.gallery();
        let mut manifest = bench.manifest().with_seed(seed);
        if let Some(p) = permutations {
            manifest = manifest.with_param("permutations", p);
        }
        let mut notations = IndexMap::new();
        for notation in gallery.notations() {
            let id = notation.id.as_str();
            let mut sprawl = IndexMap::new();
            let mut remoteness = IndexMap::new();
            let mut distances = IndexMap::new();
            let mut base = None;
            for metric in MetricId::ALL {
                let summary = bench.summary(id, metric)?;
                sprawl.insert(metric.to_string(), summary.sprawl);
                remoteness.insert(metric.to_string(), summary.remoteness.clone());
                distances.insert(metric.to_string(), (*bench.matrix(id, metric)?).clone());
                base.get_or_insert(summary);
            }
            let base = base.expect("at least one metric");
            notations.insert(
                id.to_string(),
                NotationMetrics {
                    language_id: notation.language_id.clone(),
                    median_spec_length: base.median_spec_length,
                    vocabulary_size: base.vocabulary_size,
                    spec_lengths: gallery
                        .specs(id)?
                        .iter()
                        .map(|s| (s.example_id.clone(), s.byte_length))
                        .collect(),
                    sprawl,
                    remoteness,
                    distances,
                    ld_cd_correlation: bench.ld_cd_correlation(id, permutations, seed)?,
                },
            );
        }
        Ok(Self {
            manifest,
            notations,
        })
    }
}

fn number(v: f64) -> String {
    format!("{v}")
}

fn optional(v: Option<f64>) -> String {
    v.map(number).unwrap_or_default()
}

/// Long-form rows under [`CSV_HEADER`]: manifest fields, then per notation
/// its aggregates, per-example values, and upper-triangle distances with
/// `example` set to `<a>|<b>`.
pub fn csv_rows(export: &MetricsExport) -> Vec<[String; 4]> {
    let mut rows = Vec::new();
    let row =
        |n: &str, e: &str, m: &str, v: String| [n.to_string(), e.to_string(), m.to_string(), v];

    let manifest = serde_json::to_value(&export.manifest).expect("manifest serializes");
    if let serde_json::Value::Object(fields) = manifest {
        for (key, value) in fields {
            let text = match value {
                serde_json::Value::String(s) => s,
                serde_json::Value::Null => String::new(),
                other => other.to_string(),
            };
            rows.push(row(CSV_MANIFEST_ROW, "", &key, text));
        }
    }

    for (id, n) in &export.notations {
        rows.push(row(
            id,
            "",
            "median_spec_length",
            number(n.median_spec_length),
        ));
        rows.push(row(
            id,
            "",
            "vocabulary_size",
            n.vocabulary_size.to_string(),
        ));
        for (metric, value) in &n.sprawl {
            rows.push(row(id, "", &format!("sprawl_{metric}"), optional(*value)));
        }
        rows.push(row(
            id,
            "",
            "ld_cd_pearson_r",
            optional(n.ld_cd_correlation.pearson_r),
        ));
        rows.push(row(
            id,
            "",
            "ld_cd_permutation_p",
            optional(n.ld_cd_correlation.permutation_p),
        ));
        for (example, len) in &n.spec_lengths {
            rows.push(row(id, example, "spec_length", len.to_string()));
            for (metric, values) in &n.remoteness {
                if let Some(v) = values.get(example) {
                    rows.push(row(
                        id,
                        example,
                        &format!("remoteness_{metric}"),
                        number(*v),
                    ));
                }
            }
        }
        for (metric, matrix) in &n.distances {
            for i in 0..matrix.n() {
                for j in i + 1..matrix.n() {
                    let pair = format!("{}|{}", matrix.examples[i], matrix.examples[j]);
                    rows.push(row(
                        id,
                        &pair,
                        &format!("distance_{metric}"),
                        number(matrix.get(i, j)),
                    ));
                }
            }
        }
    }
    rows
}

fn render_csv(export: &MetricsExport) -> Result<Vec<u8>> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| crate::Error::Io(std::io::Error::other(e));
    writer.write_record(CSV_HEADER).map_err(io)?;
    for r in csv_rows(export) {
        writer.write_record(&r).map_err(io)?;
    }
    writer
        .into_inner()
        .map_err(|e| crate::Error::Io(e.into_error()))
}

pub(super) fn cmd_metrics(args: &MetricsArgs, out: &mut dyn Write) -> Result<()> {
    let bench = open(&args.gallery)?;
    let permutations = (args.permutations > 0).then_some(args.permutations);
    let export = MetricsExport::build(&bench, permutations, args.seed)?;
    let bytes = match args.format {
        Format::Json => {
            let mut bytes = serde_json::to_vec_pretty(&export)?;
            bytes.push(b'\n');
            bytes
        }
        Format::Csv => render_csv(&export)?,
    };
    match &args.out {
        Some(path) => {
            write_output(path, &bytes)?;
            writeln!(out, "wrote {}", path.display())?;
        }
        None => out.write_all(&bytes)?,
    }
    Ok(())
}
