use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::analysis::{
    self, BootstrapMetric, BootstrapResult, CorrelationReport, Dendrogram, Embedding2D, JoinRow,
    Linkage, SpanningTree,
};
use crate::cache::DiskCache;
use crate::error::Result;
use crate::gallery::Gallery;
use crate::manifest::RunManifest;
use crate::metrics::{self, CompressorConfig, DistanceMatrix, MetricId, NotationSummary};

/// A loaded gallery plus the configuration every derived value depends
/// on. Distance matrices are computed once per (notation, metric) and
/// shared; the disk cache, when attached, persists them across runs.
#[derive(Debug)]
pub struct Workbench {
    gallery: Gallery,
    compressor: CompressorConfig,
    disk: Option<DiskCache>,
    matrices: Mutex<HashMap<(String, MetricId), Arc<DistanceMatrix>>>,
}

impl Workbench {
    pub fn new(gallery: Gallery, compressor: CompressorConfig) -> Self {
        Self {
            gallery,
            compressor,
            disk: None,
            matrices: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_disk_cache(mut self, cache: DiskCache) -> Self {
        self.disk = Some(cache);
        self
    }

    pub fn gallery(&self) -> &Gallery {
        &self.gallery
    }

    pub fn compressor(&self) -> &CompressorConfig {
        &self.compressor
    }

    pub fn manifest(&self) -> RunManifest {
        RunManifest::new(&self.gallery, &self.compressor)
    }

    fn cache_key(&self, metric: MetricId) -> String {
        match metric {
            MetricId::Cd => self.compressor.to_string(),
            MetricId::TokenLd => self.gallery.registry().digest(),
        }
    }

    pub fn matrix(&self, notation_id: &str, metric: MetricId) -> Result<Arc<DistanceMatrix>> {
        self.gallery.notation(notation_id)?;
        let key = (notation_id.to_string(), metric);
        if let Some(m) = self.matrices.lock().expect("matrix memo").get(&key) {
            return Ok(Arc::clone(m));
        }

        let config_key = self.cache_key(metric);
        let cached = self
            .disk
            .as_ref()
            .and_then(|d| d.load_matrix(notation_id, metric, &config_key))
            .filter(|m| m.examples == self.gallery.examples());
        let matrix = match cached {
            Some(m) => m,
            None => {
                let m =
                    metrics::distance_matrix(&self.gallery, notation_id, metric, &self.compressor)?;
                if let Some(disk) = &self.disk {
                    // the cache is an optimization; a read-only location is not fatal
                    let _ = disk.store_matrix(&m, &config_key);
                }
                m
            }
        };

        let mut memo = self.matrices.lock().expect("matrix memo");
        Ok(Arc::clone(
            memo.entry(key).or_insert_with(|| Arc::new(matrix)),
        ))
    }

    pub fn summary(&self, notation_id: &str, metric: MetricId) -> Result<NotationSummary> {
        let matrix = self.matrix(notation_id, metric)?;
        metrics::notation_summary(&self.gallery, notation_id, &matrix)
    }

    pub fn join(
        &self,
        notation_a: &str,
        notation_b: &str,
        metric: MetricId,
    ) -> Result<Vec<JoinRow>> {
        let a = self.matrix(notation_a, metric)?;
        let b = self.matrix(notation_b, metric)?;
        analysis::cross_notation_join(&self.gallery, &a, &b)
    }

    pub fn embedding(&self, notation_id: &str, metric: MetricId) -> Result<Embedding2D> {
        analysis::mds_embed(&*self.matrix(notation_id, metric)?)
    }

    pub fn dendrogram(
        &self,
        notation_id: &str,
        metric: MetricId,
        linkage: Linkage,
    ) -> Result<Dendrogram> {
        analysis::cluster(&*self.matrix(notation_id, metric)?, linkage)
    }

    pub fn spanning_tree(&self, notation_id: &str, metric: MetricId) -> Result<SpanningTree> {
        analysis::mst(&*self.matrix(notation_id, metric)?)
    }

    pub fn bootstrap(
        &self,
        notation_id: &str,
        metric: BootstrapMetric,
        distance: MetricId,
        sample_count: usize,
        seed: u64,
    ) -> Result<BootstrapResult> {
        let matrix = match metric {
            BootstrapMetric::Sprawl => Some(self.matrix(notation_id, distance)?),
            _ => None,
        };
        analysis::bootstrap(
            &self.gallery,
            notation_id,
            metric,
            sample_count,
            seed,
            matrix.as_deref(),
        )
    }

    /// Correlation between the compression-distance and token-LD triangles.
    pub fn ld_cd_correlation(
        &self,
        notation_id: &str,
        permutations: Option<usize>,
        seed: u64,
    ) -> Result<CorrelationReport> {
        let cd = self.matrix(notation_id, MetricId::Cd)?;
        let ld = self.matrix(notation_id, MetricId::TokenLd)?;
        analysis::correlate(&cd, &ld, permutations, seed)
    }
}
