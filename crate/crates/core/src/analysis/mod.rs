//! Higher-order artifacts derived from distance matrices and per-spec
//! metrics.

mod bootstrap;
mod cluster;
mod correlate;
mod join;
mod mds;
mod mst;

pub use bootstrap::{
    bootstrap, BootstrapMetric, BootstrapResult, Quantiles, BOOTSTRAP_PRNG, DEFAULT_SAMPLE_COUNT,
};
pub use cluster::{cluster, Dendrogram, Linkage, Merge};
pub use correlate::{correlate, CorrelationReport};
pub use join::{cross_notation_join, JoinRow};
pub use mds::{classical_mds, mds_embed, Embedding2D};
pub use mst::{mst, SpanningTree, TreeEdge};
