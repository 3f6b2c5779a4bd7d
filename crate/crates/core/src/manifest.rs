use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::gallery::Gallery;
use crate::metrics::CompressorConfig;

pub const TOOL_NAME: &str = "notascope";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything needed to reproduce an exported artifact.
///
/// `timestamp` is taken from `SOURCE_DATE_EPOCH` when set and is absent
/// otherwise, so reruns stay byte-identical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub tool_version: String,
    pub gallery_content_hash: String,
    pub dataset_name: String,
    pub compressor: String,
    pub tokenizer_registry_digest: String,
    pub prng: String,
    pub seed: Option<u64>,
    pub timestamp: Option<u64>,
    pub parameters: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(gallery: &Gallery, compressor: &CompressorConfig) -> Self {
        Self {
            tool: TOOL_NAME.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            gallery_content_hash: gallery.content_hash().to_string(),
            dataset_name: gallery.dataset_name().to_string(),
            compressor: compressor.to_string(),
            tokenizer_registry_digest: gallery.registry().digest(),
            prng: crate::analysis::BOOTSTRAP_PRNG.to_string(),
            seed: None,
            timestamp: source_date_epoch(),
            parameters: BTreeMap::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}

fn source_date_epoch() -> Option<u64> {
    std::env::var("SOURCE_DATE_EPOCH").ok()?.trim().parse().ok()
}
