//! Notation metrics for multi-notation visualization galleries.
//!
//! A gallery expresses every example chart in every notation. From it this
//! crate computes textual usability metrics (specification length,
//! vocabulary size, compression distance, token edit distance, remoteness,
//! sprawl) and derived analyses (bootstrap distributions, classical MDS,
//! average-linkage dendrograms, minimum spanning trees, correlation
//! reports). The same values are exported by the `notascope` CLI and
//! served over HTTP.
//!
//! ```no_run
//! use notascope::{load_gallery, metrics::{CompressorConfig, MetricId}, Workbench};
//!
//! let gallery = load_gallery("gallery/sample".as_ref())?;
//! let bench = Workbench::new(gallery, CompressorConfig::default());
//! let summary = bench.summary("json-vl", MetricId::Cd)?;
//! println!("sprawl = {:?}", summary.sprawl);
//! # Ok::<(), notascope::Error>(())
//! ```

pub mod analysis;
pub mod cache;
pub mod cli;
mod error;
pub mod gallery;
pub mod manifest;
pub mod metrics;
pub mod service;
pub mod stats;
pub mod tokenizer;
mod workbench;

pub use error::{Error, Result};
pub use gallery::{load_gallery, Gallery, Spec};
pub use manifest::RunManifest;
pub use workbench::Workbench;
