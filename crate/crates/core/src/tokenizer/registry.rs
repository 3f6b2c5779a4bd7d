use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{tokenize_with, LexError, LexerConfig, Token};

/// Tokenizer id of the language-neutral fallback.
pub const GENERIC_TOKENIZER: &str = "generic";

const GENERIC_OPERATORS: &[&str] = &["==", "!=", "<=", ">=", "&&", "||", "->", "=>", "::"];

const PYTHON_KEYWORDS: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class", "continue",
    "def", "del", "elif", "else", "except", "finally", "for", "from", "global", "if", "import",
    "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return", "try", "while",
    "with", "yield",
];

const R_KEYWORDS: &[&str] = &[
    "if", "else", "repeat", "while", "function", "for", "in", "next", "break", "TRUE", "FALSE",
    "NULL", "Inf", "NaN", "NA",
];

const JS_KEYWORDS: &[&str] = &[
    "async",
    "await",
    "break",
    "case",
    "catch",
    "class",
    "const",
    "continue",
    "default",
    "delete",
    "do",
    "else",
    "export",
    "extends",
    "false",
    "finally",
    "for",
    "function",
    "if",
    "import",
    "in",
    "instanceof",
    "let",
    "new",
    "null",
    "return",
    "switch",
    "this",
    "throw",
    "true",
    "try",
    "typeof",
    "undefined",
    "var",
    "void",
    "while",
    "yield",
];

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Named lexer configurations, keyed by tokenizer id.
///
/// The built-in set covers `generic`, `json`, `python`, `r` and
/// `javascript`. A gallery may ship a `tokenizers.json` that extends a
/// built-in entry or defines a new one on top of `generic`:
///
/// ```json
/// { "python": { "operators": ["@="] }, "vega-expr": { "string_delimiters": ["'"] } }
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenizerRegistry {
    tokenizers: BTreeMap<String, LexerConfig>,
}

impl Default for TokenizerRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl TokenizerRegistry {
    pub fn builtin() -> Self {
        let generic = LexerConfig {
            string_delimiters: strings(&["\"", "'"]),
            operators: strings(GENERIC_OPERATORS),
            ..Default::default()
        };
        let json = LexerConfig {
            string_delimiters: strings(&["\""]),
            keywords: strings(&["true", "false", "null"]),
            ..Default::default()
        };
        let python = LexerConfig {
            string_delimiters: strings(&["\"\"\"", "'''", "\"", "'"]),
            multiline_strings: strings(&["\"\"\"", "'''"]),
            line_comments: strings(&["#"]),
            operators: strings(&[
                "**=", "//=", ">>=", "<<=", "==", "!=", "<=", ">=", "**", "//", "->", ":=", "+=",
                "-=", "*=", "/=", "%=", "<<", ">>",
            ]),
            keywords: strings(PYTHON_KEYWORDS),
            ..Default::default()
        };
        let r = LexerConfig {
            string_delimiters: strings(&["\"", "'", "`"]),
            multiline_strings: strings(&["\"", "'"]),
            line_comments: strings(&["#"]),
            operators: strings(&[
                "<<-", "->>", "%>%", "%in%", "%%", "|>", "<-", "->", "==", "!=", "<=", ">=", "&&",
                "||", ":::", "::",
            ]),
            keywords: strings(R_KEYWORDS),
            ..Default::default()
        };
        let javascript = LexerConfig {
            string_delimiters: strings(&["\"", "'", "`"]),
            multiline_strings: strings(&["`"]),
            line_comments: strings(&["//"]),
            block_comments: vec![("/*".into(), "*/".into())],
            operators: strings(&[
                "===", "!==", "**=", "...", "=>", "==", "!=", "<=", ">=", "&&", "||", "??", "?.",
                "++", "--", "+=", "-=", "*=", "/=", "**",
            ]),
            keywords: strings(JS_KEYWORDS),
        };

        let tokenizers = [
            (GENERIC_TOKENIZER, generic),
            ("json", json),
            ("python", python),
            ("r", r),
            ("javascript", javascript),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
        Self { tokenizers }
    }

    /// Applies an override map: existing ids are extended, new ids start
    /// from the generic tokenizer.
    pub fn apply_overrides(
        &mut self,
        overrides: &BTreeMap<String, LexerConfig>,
    ) -> Result<(), String> {
        for (id, extra) in overrides {
            extra
                .validate()
                .map_err(|e| format!("tokenizer `{id}`: {e}"))?;
            let base = self
                .tokenizers
                .get(id)
                .or_else(|| self.tokenizers.get(GENERIC_TOKENIZER))
                .cloned()
                .unwrap_or_default();
            let mut merged = base;
            merged.extend(extra);
            self.tokenizers.insert(id.clone(), merged);
        }
        Ok(())
    }

    /// Built-in registry extended by the override file at `path`.
    pub fn from_override_file(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let overrides: BTreeMap<String, LexerConfig> =
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let mut registry = Self::builtin();
        registry.apply_overrides(&overrides)?;
        Ok(registry)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.tokenizers.contains_key(id)
    }

    pub fn get(&self, id: &str) -> Option<&LexerConfig> {
        self.tokenizers.get(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.tokenizers.keys().map(String::as_str)
    }

    /// Tokenizes with the registered tokenizer `id`.
    ///
    /// # Panics
    /// If `id` is not registered; gallery loading rejects such ids up front.
    pub fn tokenize(&self, id: &str, text: &str) -> Result<Vec<Token>, LexError> {
        let config = self
            .get(id)
            .unwrap_or_else(|| panic!("tokenizer `{id}` is not registered"));
        tokenize_with(text, config)
    }

    /// SHA-256 over the canonical JSON form of every registered config.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_vec(&self.tokenizers).expect("registry serializes");
        hex::encode(Sha256::digest(&canonical))
    }
}
