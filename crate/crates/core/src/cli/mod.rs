//! `notascope <validate|metrics|analyze|serve> <gallery-root> [flags]`
//!
//! Exit codes: 0 success, 1 domain error (invalid gallery, bad flag
//! value, degenerate input), 2 environment or I/O error.

mod analyze;
mod export;
mod serve;
mod validate;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use analyze::{Artifact, ARTIFACT_NAMES};
pub use export::{csv_rows, MetricsExport, NotationMetrics};

use crate::cache::DiskCache;
use crate::error::{Error, Result};
use crate::gallery::load_gallery;
use crate::metrics::CompressorConfig;
use crate::Workbench;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_ENVIRONMENT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "notascope",
    version,
    about = "Notation metrics for multi-notation visualization galleries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that every notation covers every example.
    Validate {
        /// Gallery root containing gallery.json.
        root: PathBuf,
    },
    /// Export spec lengths, vocabulary, distances, remoteness and sprawl.
    Metrics(MetricsArgs),
    /// Write per-notation analysis artifacts as JSON.
    Analyze(AnalyzeArgs),
    /// Serve the read-only HTTP API.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
struct GalleryArgs {
    /// Gallery root containing gallery.json.
    root: PathBuf,
    /// Compressor for compression distance, `algorithm[:level]`.
    #[arg(long, default_value = "zlib:9")]
    compressor: String,
    /// Neither read nor write the on-disk matrix cache.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct MetricsArgs {
    #[command(flatten)]
    gallery: GalleryArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the LD-CD permutation test.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Label permutations for the LD-CD correlation p-value (0 disables).
    #[arg(long, default_value_t = 999)]
    permutations: usize,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    gallery: GalleryArgs,
    /// Comma-separated subset of mds, dendrogram, mst, bootstrap.
    #[arg(long, default_value = "mds,dendrogram,mst,bootstrap")]
    artifacts: String,
    /// Bootstrap samples per metric.
    #[arg(long, default_value_t = crate::analysis::DEFAULT_SAMPLE_COUNT)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory.
    #[arg(long, default_value = "notascope-out")]
    out: PathBuf,
    /// Distance behind mds, dendrogram, mst and sprawl bootstrap: cd or token_ld.
    #[arg(long, default_value = "cd")]
    metric: String,
    /// Dendrogram linkage: average, single or complete.
    #[arg(long, default_value = "average")]
    linkage: String,
}

#[derive(Debug, Args)]
struct ServeArgs {
    #[command(flatten)]
    gallery: GalleryArgs,
    #[arg(long, default_value_t = 8080)]
    port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    host: String,
    /// Directory with a built UI bundle, served for non-API paths.
    #[arg(long)]
    static_dir: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return EXIT_ENVIRONMENT;
            }
            let _ = write!(out, "{rendered}");
            return EXIT_OK;
        }
    };
    match cli.command {
        Command::Validate { root } => validate::cmd_validate(&root, out, err),
        Command::Metrics(args) => report(export::cmd_metrics(&args, out), err),
        Command::Analyze(args) => report(analyze::cmd_analyze(&args, out), err),
        Command::Serve(args) => serve::cmd_serve(&args, out, err),
    }
}

fn report(result: Result<()>, err: &mut dyn Write) -> i32 {
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => fail(&e, err),
    }
}

fn fail(e: &Error, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {e}");
    if e.is_environmental() {
        EXIT_ENVIRONMENT
    } else {
        EXIT_DOMAIN
    }
}

fn open(args: &GalleryArgs) -> Result<Workbench> {
    let compressor: CompressorConfig = args.compressor.parse()?;
    compressor.check_available()?;
    let gallery = load_gallery(&args.root)?;
    let cache =
        (!args.no_cache).then(|| DiskCache::for_gallery(&args.root, gallery.content_hash()));
    let bench = Workbench::new(gallery, compressor);
    Ok(match cache {
        Some(cache) => bench.with_disk_cache(cache),
        None => bench,
    })
}

fn write_output(path: &std::path::Path, bytes: &[u8]) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, bytes)?;
    Ok(())
}
