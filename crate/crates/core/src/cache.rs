//! On-disk cache of distance matrices under
//! `<cache root>/<content_hash>/`, shared by every command.

use std::io;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::manifest::TOOL_VERSION;
use crate::metrics::{DistanceMatrix, MetricId};

/// Overrides the cache root.
pub const CACHE_DIR_ENV: &str = "NOTASCOPE_CACHE_DIR";
/// Default cache root, relative to the gallery root.
pub const DEFAULT_CACHE_DIR: &str = ".notascope-cache";

#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    /// Cache directory for a gallery: `$NOTASCOPE_CACHE_DIR/<hash>` or
    /// `<gallery root>/.notascope-cache/<hash>`.
    pub fn for_gallery(gallery_root: &Path, content_hash: &str) -> Self {
        let base = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| gallery_root.join(DEFAULT_CACHE_DIR));
        Self {
            dir: base.join(content_hash),
        }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn matrix_path(&self, notation_id: &str, metric: MetricId, config_key: &str) -> PathBuf {
        let mut hasher = Sha256::new();
        hasher.update(TOOL_VERSION.as_bytes());
        hasher.update([0]);
        hasher.update(config_key.as_bytes());
        let digest = hex::encode(hasher.finalize());
        self.dir
            .join(format!("{notation_id}.{metric}.{}.json", &digest[..16]))
    }

    /// A cached matrix, or `None` when absent or unusable.
    pub fn load_matrix(
        &self,
        notation_id: &str,
        metric: MetricId,
        config_key: &str,
    ) -> Option<DistanceMatrix> {
        let bytes = std::fs::read(self.matrix_path(notation_id, metric, config_key)).ok()?;
        let matrix: DistanceMatrix = serde_json::from_slice(&bytes).ok()?;
        let usable = matrix.notation_id == notation_id
            && matrix.metric_id == metric
            && matrix.check().is_ok();
        usable.then_some(matrix)
    }

    /// Writes via a temporary file and rename so readers never see a
    /// partial file.
    pub fn store_matrix(&self, matrix: &DistanceMatrix, config_key: &str) -> io::Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let path = self.matrix_path(&matrix.notation_id, matrix.metric_id, config_key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, serde_json::to_vec(matrix)?)?;
        std::fs::rename(&tmp, &path)
    }
}
