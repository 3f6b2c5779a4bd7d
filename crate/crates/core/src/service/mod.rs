//! Read-only HTTP API over a [`Workbench`].
//!
//! All responses are JSON except `/img/{example}`. Failures use the
//! envelope `{"error": {"code": "...", "message": "..."}}` with 404 for
//! unknown notations, examples and images and 400 for bad query
//! parameters. Derived artifacts are computed on the blocking pool and
//! memoized per (content hash, endpoint, parameters).

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path as UrlPath, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use serde::Serialize;
use serde_json::json;
use tower_http::cors::CorsLayer;
use tower_http::services::ServeDir;

use crate::analysis::{BootstrapMetric, BootstrapResult, Linkage, DEFAULT_SAMPLE_COUNT};
use crate::error::Error;
use crate::metrics::{compression_distance, edit_script, EditKind, MetricId};
use crate::tokenizer::Token;
use crate::Workbench;

/// Largest accepted `samples` value for `/api/bootstrap`.
pub const MAX_BOOTSTRAP_SAMPLES: usize = 100_000;

type Params = HashMap<String, String>;

#[derive(Debug)]
struct AppState {
    bench: Arc<Workbench>,
    responses: Mutex<HashMap<String, Bytes>>,
}

/// Routes of the API. Paths outside `/api` and `/img` are served from
/// `static_dir` when given.
pub fn router(bench: Arc<Workbench>, static_dir: Option<&Path>) -> Router {
    let state = Arc::new(AppState {
        bench,
        responses: Mutex::new(HashMap::new()),
    });
    let api = Router::new()
        .route("/api/notations", get(notations))
        .route("/api/specs/{notation}/{example}", get(spec))
        .route("/api/distances/{notation}", get(distances))
        .route("/api/remoteness", get(remoteness))
        .route("/api/embedding/{notation}", get(embedding))
        .route("/api/dendrogram/{notation}", get(dendrogram))
        .route("/api/mst/{notation}", get(mst))
        .route("/api/bootstrap/{notation}", get(bootstrap))
        .route("/api/diff/{na}/{ea}/{nb}/{eb}", get(diff))
        .route("/img/{example}", get(image))
        .route("/api/{*rest}", get(api_not_found))
        .with_state(state);
    let app = match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.fallback(not_found),
    };
    app.layer(CorsLayer::permissive())
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
}

impl ApiError {
    fn bad_request(message: impl Into<String>) -> Self {
        Self {
            status: StatusCode::BAD_REQUEST,
            code: "bad_request",
            message: message.into(),
        }
    }

    fn not_found(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            status: StatusCode::NOT_FOUND,
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        let (status, code) = match &e {
            Error::UnknownNotation(_) => (StatusCode::NOT_FOUND, "unknown_notation"),
            Error::UnknownExample(_) => (StatusCode::NOT_FOUND, "unknown_example"),
            Error::UnknownMetric(_) => (StatusCode::BAD_REQUEST, "unknown_metric"),
            Error::InvalidArgument(_) => (StatusCode::BAD_REQUEST, "bad_request"),
            Error::DegenerateGallery(_) => (StatusCode::UNPROCESSABLE_ENTITY, "degenerate_gallery"),
            _ => (StatusCode::INTERNAL_SERVER_ERROR, "internal"),
        };
        Self {
            status,
            code,
            message,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = json!({ "error": { "code": self.code, "message": self.message } });
        (self.status, axum::Json(body)).into_response()
    }
}

type ApiResult = Result<Response, ApiError>;

fn json_bytes(body: Bytes) -> Response {
    ([(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn to_bytes<T: Serialize>(value: &T) -> Result<Bytes, ApiError> {
    serde_json::to_vec(value)
        .map(Bytes::from)
        .map_err(|e| ApiError::from(Error::from(e)))
}

/// Serves from the response memo or computes `f` on the blocking pool.
/// Concurrent misses may both compute; the first insert wins.
async fn cached<T, F>(
    state: &Arc<AppState>,
    endpoint: &str,
    params: &[(&str, String)],
    f: F,
) -> ApiResult
where
    T: Serialize,
    F: FnOnce(&Workbench) -> crate::Result<T> + Send + 'static,
{
    let mut key = format!("{}\n{endpoint}", state.bench.gallery().content_hash());
    for (k, v) in params {
        key.push_str(&format!("\n{k}={v}"));
    }
    if let Some(body) = state.responses.lock().expect("response cache").get(&key) {
        return Ok(json_bytes(body.clone()));
    }
    let bench = Arc::clone(&state.bench);
    let body = tokio::task::spawn_blocking(move || {
        f(&bench).map_err(ApiError::from).and_then(|v| to_bytes(&v))
    })
    .await
    .map_err(|e| ApiError {
        status: StatusCode::INTERNAL_SERVER_ERROR,
        code: "internal",
        message: e.to_string(),
    })??;
    let body = state
        .responses
        .lock()
        .expect("response cache")
        .entry(key)
        .or_insert(body)
        .clone();
    Ok(json_bytes(body))
}

fn distance_metric(params: &Params, key: &str) -> Result<MetricId, ApiError> {
    match params.get(key) {
        None => Ok(MetricId::Cd),
        Some(s) => s.parse().map_err(ApiError::from),
    }
}

fn number<T: std::str::FromStr>(params: &Params, key: &str, default: T) -> Result<T, ApiError> {
    match params.get(key) {
        None => Ok(default),
        Some(s) => s.parse().map_err(|_| {
            ApiError::bad_request(format!("`{key}` must be a non-negative integer, got `{s}`"))
        }),
    }
}

#[derive(Serialize)]
struct NotationRow {
    id: String,
    language_id: String,
    tokenizer_id: String,
    vocabulary_size: usize,
    median_spec_length: f64,
    /// Keyed by metric id.
    sprawl: BTreeMap<&'static str, Option<f64>>,
}

async fn notations(State(state): State<Arc<AppState>>) -> ApiResult {
    cached(&state, "notations", &[], |bench| {
        let mut rows = Vec::new();
        for n in bench.gallery().notations() {
            let mut sprawl = BTreeMap::new();
            let mut base = None;
            for metric in MetricId::ALL {
                let summary = bench.summary(&n.id, metric)?;
                sprawl.insert(metric.as_str(), summary.sprawl);
                base.get_or_insert(summary);
            }
            let base = base.expect("at least one metric");
            rows.push(NotationRow {
                id: n.id.clone(),
                language_id: n.language_id.clone(),
                tokenizer_id: n.tokenizer_id.clone(),
                vocabulary_size: base.vocabulary_size,
                median_spec_length: base.median_spec_length,
                sprawl,
            });
        }
        Ok(rows)
    })
    .await
}

#[derive(Serialize)]
struct SpecBody<'a> {
    notation_id: &'a str,
    example_id: &'a str,
    raw: &'a str,
    normalized: &'a str,
    byte_length: usize,
    tokens: &'a [Token],
}

async fn spec(
    State(state): State<Arc<AppState>>,
    UrlPath((notation, example)): UrlPath<(String, String)>,
) -> ApiResult {
    let gallery = state.bench.gallery();
    let spec = gallery.spec(&notation, &example)?;
    let stream = gallery.token_stream(&notation, &example)?;
    let body = SpecBody {
        notation_id: &spec.notation_id,
        example_id: &spec.example_id,
        raw: &spec.raw_text,
        normalized: &spec.normalized_text,
        byte_length: spec.byte_length,
        tokens: &stream.tokens,
    };
    Ok(json_bytes(to_bytes(&body)?))
}

async fn distances(
    State(state): State<Arc<AppState>>,
    UrlPath(notation): UrlPath<String>,
    Query(params): Query<Params>,
) -> ApiResult {
    state.bench.gallery().notation(&notation)?;
    let metric = distance_metric(&params, "metric")?;
    let key = [
        ("notation", notation.clone()),
        ("metric", metric.to_string()),
    ];
    cached(&state, "distances", &key, move |bench| {
        bench.matrix(&notation, metric).map(|m| (*m).clone())
    })
    .await
}

async fn remoteness(State(state): State<Arc<AppState>>, Query(params): Query<Params>) -> ApiResult {
    let (Some(a), Some(b)) = (params.get("a").cloned(), params.get("b").cloned()) else {
        return Err(ApiError::bad_request(
            "query parameters `a` and `b` are required",
        ));
    };
    state.bench.gallery().notation(&a)?;
    state.bench.gallery().notation(&b)?;
    let metric = distance_metric(&params, "metric")?;
    let key = [
        ("a", a.clone()),
        ("b", b.clone()),
        ("metric", metric.to_string()),
    ];
    cached(&state, "remoteness", &key, move |bench| {
        bench.join(&a, &b, metric)
    })
    .await
}

async fn embedding(
    State(state): State<Arc<AppState>>,
    UrlPath(notation): UrlPath<String>,
    Query(params): Query<Params>,
) -> ApiResult {
    state.bench.gallery().notation(&notation)?;
    let metric = distance_metric(&params, "metric")?;
    let key = [
        ("notation", notation.clone()),
        ("metric", metric.to_string()),
    ];
    cached(&state, "embedding", &key, move |bench| {
        bench.embedding(&notation, metric)
    })
    .await
}

async fn dendrogram(
    State(state): State<Arc<AppState>>,
    UrlPath(notation): UrlPath<String>,
    Query(params): Query<Params>,
) -> ApiResult {
    state.bench.gallery().notation(&notation)?;
    let metric = distance_metric(&params, "metric")?;
    let linkage: Linkage = match params.get("linkage") {
        None => Linkage::default(),
        Some(s) => s.parse()?,
    };
    let key = [
        ("notation", notation.clone()),
        ("metric", metric.to_string()),
        ("linkage", linkage.to_string()),
    ];
    cached(&state, "dendrogram", &key, move |bench| {
        bench.dendrogram(&notation, metric, linkage)
    })
    .await
}

async fn mst(
    State(state): State<Arc<AppState>>,
    UrlPath(notation): UrlPath<String>,
    Query(params): Query<Params>,
) -> ApiResult {
    state.bench.gallery().notation(&notation)?;
    let metric = distance_metric(&params, "metric")?;
    let key = [
        ("notation", notation.clone()),
        ("metric", metric.to_string()),
    ];
    cached(&state, "mst", &key, move |bench| {
        bench.spanning_tree(&notation, metric)
    })
    .await
}

/// `metric` selects one bootstrapped statistic; without it all three are
/// returned keyed by name. `distance` picks the matrix behind sprawl.
async fn bootstrap(
    State(state): State<Arc<AppState>>,
    UrlPath(notation): UrlPath<String>,
    Query(params): Query<Params>,
) -> ApiResult {
    state.bench.gallery().notation(&notation)?;
    let metrics: Vec<BootstrapMetric> = match params.get("metric") {
        None => BootstrapMetric::ALL.to_vec(),
        Some(s) => vec![s.parse()?],
    };
    let distance = distance_metric(&params, "distance")?;
    let samples: usize = number(&params, "samples", DEFAULT_SAMPLE_COUNT)?;
    if samples == 0 || samples > MAX_BOOTSTRAP_SAMPLES {
        return Err(ApiError::bad_request(format!(
            "`samples` must be between 1 and {MAX_BOOTSTRAP_SAMPLES}"
        )));
    }
    let seed: u64 = number(&params, "seed", 0)?;
    let single = params.contains_key("metric");
    let key = [
        ("notation", notation.clone()),
        ("metric", params.get("metric").cloned().unwrap_or_default()),
        ("distance", distance.to_string()),
        ("samples", samples.to_string()),
        ("seed", seed.to_string()),
    ];
    cached(&state, "bootstrap", &key, move |bench| {
        let mut results = indexmap::IndexMap::new();
        for m in metrics {
            results.insert(
                m.as_str(),
                bench.bootstrap(&notation, m, distance, samples, seed)?,
            );
        }
        Ok(if single {
            BootstrapBody::One(results.swap_remove_index(0).expect("one metric").1)
        } else {
            BootstrapBody::All(results)
        })
    })
    .await
}

#[derive(Serialize)]
#[serde(untagged)]
enum BootstrapBody {
    One(BootstrapResult),
    All(indexmap::IndexMap<&'static str, BootstrapResult>),
}

#[derive(Debug, Serialize)]
struct SpecRef {
    notation_id: String,
    example_id: String,
}

#[derive(Debug, Serialize)]
struct DiffOp {
    op: EditKind,
    tokens_a: Vec<String>,
    tokens_b: Vec<String>,
}

#[derive(Debug, Serialize)]
struct DiffResult {
    spec_a: SpecRef,
    spec_b: SpecRef,
    ops: Vec<DiffOp>,
    token_ld: usize,
    /// Computed with the lower (notation, example) reference first.
    compression_distance: f64,
}

async fn diff(
    State(state): State<Arc<AppState>>,
    UrlPath((na, ea, nb, eb)): UrlPath<(String, String, String, String)>,
) -> ApiResult {
    let gallery = state.bench.gallery();
    let spec_a = gallery.spec(&na, &ea)?;
    let spec_b = gallery.spec(&nb, &eb)?;
    let key = [("a", format!("{na}/{ea}")), ("b", format!("{nb}/{eb}"))];
    let (text_a, text_b) = (
        spec_a.normalized_text.clone(),
        spec_b.normalized_text.clone(),
    );
    let canonical = |n: &str, e: &str| -> crate::Result<(usize, usize)> {
        Ok((gallery.notation_index(n)?, gallery.example_index(e)?))
    };
    let a_first = canonical(&na, &ea)? <= canonical(&nb, &eb)?;
    cached(&state, "diff", &key, move |bench| {
        let gallery = bench.gallery();
        let a: Vec<&str> = gallery.token_stream(&na, &ea)?.lexemes().collect();
        let b: Vec<&str> = gallery.token_stream(&nb, &eb)?.lexemes().collect();
        let script = edit_script(&a, &b);
        let token_ld = script.iter().map(|e| e.cost()).sum();
        let ops = script
            .into_iter()
            .map(|e| DiffOp {
                op: e.kind,
                tokens_a: a[e.a].iter().map(|s| s.to_string()).collect(),
                tokens_b: b[e.b].iter().map(|s| s.to_string()).collect(),
            })
            .collect();
        let (first, second) = if a_first {
            (&text_a, &text_b)
        } else {
            (&text_b, &text_a)
        };
        let cd = compression_distance(first.as_bytes(), second.as_bytes(), bench.compressor())?;
        Ok(DiffResult {
            spec_a: SpecRef {
                notation_id: na,
                example_id: ea,
            },
            spec_b: SpecRef {
                notation_id: nb,
                example_id: eb,
            },
            ops,
            token_ld,
            compression_distance: cd,
        })
    })
    .await
}

async fn image(State(state): State<Arc<AppState>>, UrlPath(example): UrlPath<String>) -> ApiResult {
    let gallery = state.bench.gallery();
    let missing = || {
        ApiError::not_found(
            "image_not_found",
            format!("no image for example `{example}`"),
        )
    };
    let path = gallery.image(&example).ok_or_else(missing)?;
    let content_type = match path.extension().and_then(|e| e.to_str()) {
        Some("svg") => "image/svg+xml",
        _ => "image/png",
    };
    let bytes = tokio::fs::read(path).await.map_err(|e| ApiError {
        status: StatusCode::INTERNAL_SERVER_ERROR,
        code: "io",
        message: e.to_string(),
    })?;
    Ok(([(header::CONTENT_TYPE, content_type)], bytes).into_response())
}

async fn api_not_found() -> ApiError {
    ApiError::not_found("not_found", "no such endpoint")
}

async fn not_found() -> ApiError {
    ApiError::not_found("not_found", "no such resource")
}
