//! Loading, validating and normalizing a multi-notation gallery.
//!
//! On disk a gallery is a directory:
//!
//! ```text
//! <root>/gallery.json
//! <root>/tokenizers.json            optional tokenizer overrides
//! <root>/<notation_id>/<example_id>.<file_extension>
//! <root>/img/<example_id>.png|svg   optional, shared by all notations
//! ```
//!
//! Every (notation, example) cell must exist. Loading collects every
//! violation before failing so a gallery author sees the whole list.

mod config;
mod normalize;

use std::collections::BTreeMap;
use std::fmt;
use std::io;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use thiserror::Error;

pub use config::{GalleryConfig, NormalizerKind, NormalizerSpec, NotationConfig};
pub use normalize::{canonicalize, normalize, NormalizeError, EXTERNAL_TIMEOUT};

use crate::error::{Error, Result};
use crate::tokenizer::{LexError, TokenStream, TokenizerRegistry};

pub const CONFIG_FILE: &str = "gallery.json";
pub const TOKENIZER_OVERRIDES_FILE: &str = "tokenizers.json";
pub const IMAGE_DIR: &str = "img";
const IMAGE_EXTENSIONS: &[&str] = &["png", "svg"];

/// One (notation, example) cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spec {
    pub notation_id: String,
    pub example_id: String,
    pub raw_text: String,
    pub normalized_text: String,
    /// UTF-8 byte count of `normalized_text`.
    pub byte_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingSpec {
        notation: String,
        example: String,
    },
    DuplicateExample(String),
    UnknownTokenizer {
        notation: String,
        tokenizer: String,
    },
    NormalizerFailed {
        notation: String,
        example: String,
        detail: String,
    },
    Lex {
        notation: String,
        example: String,
        error: LexError,
    },
    InvalidConfig(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingSpec { notation, example } => {
                write!(f, "MissingSpec({notation}, {example})")
            }
            Violation::DuplicateExample(example) => write!(f, "DuplicateExample({example})"),
            Violation::UnknownTokenizer {
                notation,
                tokenizer,
            } => {
                write!(
                    f,
                    "UnknownTokenizer({notation}): `{tokenizer}` is not registered"
                )
            }
            Violation::NormalizerFailed {
                notation,
                example,
                detail,
            } => {
                write!(f, "NormalizerFailed({notation}, {example}): {detail}")
            }
            Violation::Lex {
                notation,
                example,
                error,
            } => {
                write!(f, "LexError({notation}, {example}): {error}")
            }
            Violation::InvalidConfig(detail) => write!(f, "InvalidConfig: {detail}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("gallery is invalid ({} violation(s)):\n{}", .0.len(), render_violations(.0))]
    Invalid(Vec<Violation>),
}

fn render_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| format!("  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

impl LoadError {
    pub fn is_environmental(&self) -> bool {
        matches!(self, LoadError::Io { .. })
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            LoadError::Invalid(v) => v,
            LoadError::Io { .. } => &[],
        }
    }
}

/// An immutable, fully normalized and tokenized gallery.
#[derive(Debug, Clone)]
pub struct Gallery {
    config: GalleryConfig,
    /// Notation-major: `specs[notation * n_examples + example]`.
    specs: Vec<Spec>,
    tokens: Vec<TokenStream>,
    images: BTreeMap<String, PathBuf>,
    registry: TokenizerRegistry,
    content_hash: String,
}

/// Loads the gallery under `root`.
pub fn load_gallery(root: &Path) -> Result<Gallery, LoadError> {
    Gallery::load(root)
}

impl Gallery {
    pub fn load(root: &Path) -> Result<Gallery, LoadError> {
        let config_path = root.join(CONFIG_FILE);
        let text = std::fs::read_to_string(&config_path).map_err(|source| LoadError::Io {
            path: config_path.clone(),
            source,
        })?;
        let config = GalleryConfig::parse(&text).map_err(|e| {
            LoadError::Invalid(vec![Violation::InvalidConfig(format!(
                "{CONFIG_FILE}: {e}"
            ))])
        })?;

        let overrides = root.join(TOKENIZER_OVERRIDES_FILE);
        let registry = if overrides.is_file() {
            TokenizerRegistry::from_override_file(&overrides)
                .map_err(|e| LoadError::Invalid(vec![Violation::InvalidConfig(e)]))?
        } else {
            TokenizerRegistry::builtin()
        };
        // ids become path components, so nothing is read until they are valid
        let config_violations = config.violations(&registry);
        if !config_violations.is_empty() {
            return Err(LoadError::Invalid(config_violations));
        }

        let mut raw = Vec::with_capacity(config.notations.len() * config.examples.len());
        let mut violations = Vec::new();
        for notation in &config.notations {
            for example in &config.examples {
                let path = root
                    .join(&notation.id)
                    .join(format!("{example}.{}", notation.file_extension));
                match std::fs::read(&path) {
                    Ok(bytes) => match String::from_utf8(bytes) {
                        Ok(text) => raw.push(Some(text)),
                        Err(_) => {
                            violations.push(Violation::NormalizerFailed {
                                notation: notation.id.clone(),
                                example: example.clone(),
                                detail: "file is not valid UTF-8".into(),
                            });
                            raw.push(None);
                        }
                    },
                    Err(e) if e.kind() == io::ErrorKind::NotFound => raw.push(None),
                    Err(source) => return Err(LoadError::Io { path, source }),
                }
            }
        }

        let mut images = BTreeMap::new();
        for example in &config.examples {
            let found = IMAGE_EXTENSIONS
                .iter()
                .map(|ext| root.join(IMAGE_DIR).join(format!("{example}.{ext}")))
                .find(|p| p.is_file());
            if let Some(path) = found {
                images.insert(example.clone(), path);
            }
        }

        Self::assemble(config, raw, images, registry, violations)
    }

    /// Builds a gallery from in-memory texts keyed by `(notation, example)`.
    /// Absent cells are reported as [`Violation::MissingSpec`].
    pub fn from_texts(
        config: GalleryConfig,
        texts: &BTreeMap<(String, String), String>,
        registry: TokenizerRegistry,
    ) -> Result<Gallery, LoadError> {
        let mut config = config;
        for notation in &mut config.notations {
            notation.file_extension = notation.file_extension.trim_start_matches('.').to_string();
        }
        let raw = config
            .notations
            .iter()
            .flat_map(|n| {
                config
                    .examples
                    .iter()
                    .map(|e| texts.get(&(n.id.clone(), e.clone())).cloned())
            })
            .collect();
        Self::assemble(config, raw, BTreeMap::new(), registry, Vec::new())
    }

    fn assemble(
        config: GalleryConfig,
        raw: Vec<Option<String>>,
        images: BTreeMap<String, PathBuf>,
        registry: TokenizerRegistry,
        mut violations: Vec<Violation>,
    ) -> Result<Gallery, LoadError> {
        let config_violations = config.violations(&registry);
        if !config_violations.is_empty() {
            return Err(LoadError::Invalid(config_violations));
        }

        let n_examples = config.examples.len();
        let mut specs = Vec::with_capacity(raw.len());
        let mut tokens = Vec::with_capacity(raw.len());

        for (idx, text) in raw.into_iter().enumerate() {
            let notation = &config.notations[idx / n_examples];
            let example = &config.examples[idx % n_examples];
            let Some(raw_text) = text else {
                let already_reported = violations.iter().any(|v| {
                    matches!(v, Violation::NormalizerFailed { notation: n, example: e, .. }
                        if n == &notation.id && e == example)
                });
                if !already_reported {
                    violations.push(Violation::MissingSpec {
                        notation: notation.id.clone(),
                        example: example.clone(),
                    });
                }
                continue;
            };
            let normalized_text = match normalize(&raw_text, &notation.normalizer) {
                Ok(t) => t,
                Err(NormalizeError(detail)) => {
                    violations.push(Violation::NormalizerFailed {
                        notation: notation.id.clone(),
                        example: example.clone(),
                        detail,
                    });
                    continue;
                }
            };
            if registry.contains(&notation.tokenizer_id) {
                match registry.tokenize(&notation.tokenizer_id, &normalized_text) {
                    Ok(toks) => tokens.push(TokenStream {
                        notation_id: notation.id.clone(),
                        example_id: example.clone(),
                        tokens: toks,
                    }),
                    Err(error) => violations.push(Violation::Lex {
                        notation: notation.id.clone(),
                        example: example.clone(),
                        error,
                    }),
                }
            }
            specs.push(Spec {
                notation_id: notation.id.clone(),
                example_id: example.clone(),
                byte_length: normalized_text.len(),
                raw_text,
                normalized_text,
            });
        }

        if !violations.is_empty() {
            return Err(LoadError::Invalid(violations));
        }
        let content_hash = content_hash(&config, &specs);
        Ok(Gallery {
            config,
            specs,
            tokens,
            images,
            registry,
            content_hash,
        })
    }

    pub fn config(&self) -> &GalleryConfig {
        &self.config
    }

    pub fn dataset_name(&self) -> &str {
        &self.config.dataset_name
    }

    pub fn notations(&self) -> &[NotationConfig] {
        &self.config.notations
    }

    pub fn examples(&self) -> &[String] {
        &self.config.examples
    }

    pub fn notation(&self, id: &str) -> Result<&NotationConfig> {
        self.config
            .notations
            .iter()
            .find(|n| n.id == id)
            .ok_or_else(|| Error::UnknownNotation(id.to_string()))
    }

    pub fn notation_index(&self, id: &str) -> Result<usize> {
        self.config
            .notations
            .iter()
            .position(|n| n.id == id)
            .ok_or_else(|| Error::UnknownNotation(id.to_string()))
    }

    pub fn example_index(&self, id: &str) -> Result<usize> {
        self.config
            .examples
            .iter()
            .position(|e| e == id)
            .ok_or_else(|| Error::UnknownExample(id.to_string()))
    }

    /// Specs of one notation in canonical example order.
    pub fn specs(&self, notation_id: &str) -> Result<&[Spec]> {
        let n = self.config.examples.len();
        let idx = self.notation_index(notation_id)?;
        Ok(&self.specs[idx * n..(idx + 1) * n])
    }

    pub fn spec(&self, notation_id: &str, example_id: &str) -> Result<&Spec> {
        let e = self.example_index(example_id)?;
        Ok(&self.specs(notation_id)?[e])
    }

    /// Token streams of one notation in canonical example order.
    pub fn token_streams(&self, notation_id: &str) -> Result<&[TokenStream]> {
        let n = self.config.examples.len();
        let idx = self.notation_index(notation_id)?;
        Ok(&self.tokens[idx * n..(idx + 1) * n])
    }

    pub fn token_stream(&self, notation_id: &str, example_id: &str) -> Result<&TokenStream> {
        let e = self.example_index(example_id)?;
        Ok(&self.token_streams(notation_id)?[e])
    }

    pub fn image(&self, example_id: &str) -> Option<&Path> {
        self.images.get(example_id).map(PathBuf::as_path)
    }

    pub fn registry(&self) -> &TokenizerRegistry {
        &self.registry
    }

    /// Hex SHA-256 over the configuration and every normalized text in
    /// canonical order.
    pub fn content_hash(&self) -> &str {
        &self.content_hash
    }
}

fn content_hash(config: &GalleryConfig, specs: &[Spec]) -> String {
    let mut hasher = Sha256::new();
    let mut field = |bytes: &[u8]| {
        hasher.update((bytes.len() as u64).to_le_bytes());
        hasher.update(bytes);
    };
    field(b"notascope-gallery-v1");
    field(config.dataset_name.as_bytes());
    field(&(config.examples.len() as u64).to_le_bytes());
    for example in &config.examples {
        field(example.as_bytes());
    }
    field(&(config.notations.len() as u64).to_le_bytes());
    for n in &config.notations {
        field(n.id.as_bytes());
        field(n.language_id.as_bytes());
        field(n.file_extension.as_bytes());
        field(n.tokenizer_id.as_bytes());
        field(n.normalizer.kind.as_str().as_bytes());
        field(n.normalizer.command.as_deref().unwrap_or("").as_bytes());
    }
    for spec in specs {
        field(spec.normalized_text.as_bytes());
    }
    hex::encode(hasher.finalize())
}
