//! Deterministic tokenization of normalized spec text.
//!
//! Each tokenizer is a [`LexerConfig`] interpreted by one generic lexer:
//! identifiers, numbers, delimited strings, comments, maximal-munch
//! operators, and single-character punctuation. Whitespace never becomes a
//! token. Comment tokens are kept in the stream but excluded from
//! vocabulary and distance inputs (see [`TokenStream::lexemes`]).

mod lexer;
mod registry;
mod vocabulary;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use lexer::{tokenize_with, LexerConfig};
pub use registry::{TokenizerRegistry, GENERIC_TOKENIZER};
pub use vocabulary::{vocabulary, vocabulary_of, VocabularyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    Identifier,
    Keyword,
    Number,
    String,
    Punctuation,
    Operator,
    Comment,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Byte range `[start, end)` into the normalized text.
    pub span: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("lex error at byte {offset}: {detail}")]
pub struct LexError {
    pub offset: usize,
    pub detail: String,
}

/// The token stream of one spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenStream {
    pub notation_id: String,
    pub example_id: String,
    pub tokens: Vec<Token>,
}

impl TokenStream {
    /// Lexemes that count as notation: everything except comments.
    pub fn lexemes(&self) -> impl Iterator<Item = &str> + '_ {
        self.tokens
            .iter()
            .filter(|t| t.kind != TokenKind::Comment)
            .map(|t| t.lexeme.as_str())
    }
}
