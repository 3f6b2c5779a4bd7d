use std::io::Write;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::Serialize;

use super::{open, write_output, AnalyzeArgs};
use crate::analysis::{
    BootstrapMetric, BootstrapResult, Dendrogram, Embedding2D, Linkage, SpanningTree,
};
use crate::error::{Error, Result};
use crate::manifest::RunManifest;
use crate::metrics::MetricId;

pub const ARTIFACT_NAMES: [&str; 4] = ["mds", "dendrogram", "mst", "bootstrap"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Artifact {
    Mds,
    Dendrogram,
    Mst,
    Bootstrap,
}

impl Artifact {
    pub fn as_str(self) -> &'static str {
        match self {
            Artifact::Mds => "mds",
            Artifact::Dendrogram => "dendrogram",
            Artifact::Mst => "mst",
            Artifact::Bootstrap => "bootstrap",
        }
    }

    /// Parses a comma-separated list, keeping first occurrences in order.
    pub fn parse_list(list: &str) -> Result<Vec<Artifact>> {
        let mut out = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let artifact = name.parse()?;
            if !out.contains(&artifact) {
                out.push(artifact);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "no artifacts requested; valid artifacts: {}",
                ARTIFACT_NAMES.join(", ")
            )));
        }
        Ok(out)
    }
}

impl FromStr for Artifact {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mds" => Ok(Artifact::Mds),
            "dendrogram" => Ok(Artifact::Dendrogram),
            "mst" => Ok(Artifact::Mst),
            "bootstrap" => Ok(Artifact::Bootstrap),
            other => Err(Error::InvalidArgument(format!(
                "unknown artifact `{other}`; valid artifacts: {}",
                ARTIFACT_NAMES.join(", ")
            ))),
        }
    }
}

#[derive(Serialize)]
struct ArtifactFile<'a, T: Serialize> {
    manifest: &'a RunManifest,
    notation: &'a str,
    artifact: &'a str,
    data: T,
}

#[derive(Serialize)]
#[serde(untagged)]
enum ArtifactData {
    Mds(Embedding2D),
    Dendrogram(Dendrogram),
    Mst(SpanningTree),
    Bootstrap(IndexMap<&'static str, BootstrapResult>),
}

pub(super) fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<()> {
    let artifacts = Artifact::parse_list(&args.artifacts)?;
    let metric: MetricId = args.metric.parse()?;
    let linkage: Linkage = args.linkage.parse()?;
    if artifacts.contains(&Artifact::Bootstrap) && args.samples == 0 {
        return Err(Error::InvalidArgument(
            "--samples must be at least 1".into(),
        ));
    }
    let bench = open(&args.gallery)?;
    std::fs::create_dir_all(&args.out)?;

    let mut written = 0;
    for notation in bench.gallery().notations() {
        let id = notation.id.as_str();
        for &artifact in &artifacts {
            let mut manifest = bench
                .manifest()
                .with_param("artifact", artifact.as_str())
                .with_param("metric", metric);
            let data = match artifact {
                Artifact::Mds => ArtifactData::Mds(bench.embedding(id, metric)?),
                Artifact::Dendrogram => {
                    manifest = manifest.with_param("linkage", linkage);
                    ArtifactData::Dendrogram(bench.dendrogram(id, metric, linkage)?)
                }
                Artifact::Mst => ArtifactData::Mst(bench.spanning_tree(id, metric)?),
                Artifact::Bootstrap => {
                    manifest = manifest
                        .with_seed(args.seed)
                        .with_param("samples", args.samples);
                    let mut per_metric = IndexMap::new();
                    for m in BootstrapMetric::ALL {
                        let result = bench.bootstrap(id, m, metric, args.samples, args.seed)?;
                        per_metric.insert(m.as_str(), result);
                    }
                    ArtifactData::Bootstrap(per_metric)
                }
            };
            let file = ArtifactFile {
                manifest: &manifest,
                notation: id,
                artifact: artifact.as_str(),
                data,
            };
            let mut bytes = serde_json::to_vec_pretty(&file)?;
            bytes.push(b'\n');
            let path = args.out.join(format!("{id}.{}.json", artifact.as_str()));
            write_output(&path, &bytes)?;
            written += 1;
        }
    }
    writeln!(
        out,
        "wrote {written} artifact file(s) to {}",
        args.out.display()
    )?;
    Ok(())
}
