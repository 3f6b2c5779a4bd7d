use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::Violation;
use crate::tokenizer::TokenizerRegistry;

/// Contents of `gallery.json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GalleryConfig {
    pub dataset_name: String,
    /// Canonical example order; every matrix row and column follows it.
    pub examples: Vec<String>,
    pub notations: Vec<NotationConfig>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NotationConfig {
    pub id: String,
    pub language_id: String,
    /// Stored without a leading dot.
    pub file_extension: String,
    pub tokenizer_id: String,
    pub normalizer: NormalizerSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizerKind {
    BuiltinJson,
    BuiltinWhitespace,
    ExternalCommand,
    None,
}

impl NormalizerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NormalizerKind::BuiltinJson => "builtin_json",
            NormalizerKind::BuiltinWhitespace => "builtin_whitespace",
            NormalizerKind::ExternalCommand => "external_command",
            NormalizerKind::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormalizerSpec {
    pub kind: NormalizerKind,
    /// Argv template (shell-quoted) for `external_command`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
}

impl NormalizerSpec {
    pub fn of(kind: NormalizerKind) -> Self {
        Self {
            kind,
            command: None,
        }
    }

    pub fn external(command: impl Into<String>) -> Self {
        Self {
            kind: NormalizerKind::ExternalCommand,
            command: Some(command.into()),
        }
    }
}

/// Ids double as file and directory names.
pub(crate) fn is_valid_id(id: &str) -> bool {
    !id.is_empty()
        && !id.starts_with('.')
        && id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

impl GalleryConfig {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        let mut config: GalleryConfig = serde_json::from_str(text)?;
        for notation in &mut config.notations {
            let trimmed = notation.file_extension.trim_start_matches('.').to_string();
            notation.file_extension = trimmed;
        }
        Ok(config)
    }

    /// Every structural problem, in a stable order.
    pub fn violations(&self, registry: &TokenizerRegistry) -> Vec<Violation> {
        let mut out = Vec::new();

        if self.examples.is_empty() {
            out.push(Violation::InvalidConfig("`examples` is empty".into()));
        }
        if self.notations.is_empty() {
            out.push(Violation::InvalidConfig("`notations` is empty".into()));
        }

        let mut seen = HashSet::new();
        for example in &self.examples {
            if !is_valid_id(example) {
                out.push(Violation::InvalidConfig(format!(
                    "example id `{example}` must be non-empty, not start with `.`, and use only [A-Za-z0-9_.-]"
                )));
            }
            if !seen.insert(example.as_str()) {
                out.push(Violation::DuplicateExample(example.clone()));
            }
        }

        let mut seen = HashSet::new();
        for notation in &self.notations {
            let id = &notation.id;
            if !is_valid_id(id) {
                out.push(Violation::InvalidConfig(format!(
                    "notation id `{id}` must be non-empty, not start with `.`, and use only [A-Za-z0-9_.-]"
                )));
            }
            if id == "img" {
                out.push(Violation::InvalidConfig(
                    "notation id `img` is reserved for the image directory".into(),
                ));
            }
            if !seen.insert(id.as_str()) {
                out.push(Violation::InvalidConfig(format!(
                    "duplicate notation id `{id}`"
                )));
            }
            if notation.file_extension.is_empty() {
                out.push(Violation::InvalidConfig(format!(
                    "notation `{id}` has an empty file_extension"
                )));
            }
            if !registry.contains(&notation.tokenizer_id) {
                out.push(Violation::UnknownTokenizer {
                    notation: id.clone(),
                    tokenizer: notation.tokenizer_id.clone(),
                });
            }
            let normalizer = &notation.normalizer;
            let has_command = normalizer
                .command
                .as_deref()
                .is_some_and(|c| !c.trim().is_empty());
            if normalizer.kind == NormalizerKind::ExternalCommand && !has_command {
                out.push(Violation::InvalidConfig(format!(
                    "notation `{id}`: external_command normalizer needs a non-empty command"
                )));
            }
        }
        out
    }
}
