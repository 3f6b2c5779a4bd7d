use serde::{Deserialize, Serialize};

use super::{LexError, Token, TokenKind};

/// Lexical rules for one tokenizer.
///
/// All lists are matched longest-first, so `"""` wins over `"` and `<<-`
/// over `<-`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LexerConfig {
    /// String delimiters; a string closes with the same delimiter it opened with.
    pub string_delimiters: Vec<String>,
    /// Delimiters whose strings may contain raw newlines.
    pub multiline_strings: Vec<String>,
    pub line_comments: Vec<String>,
    /// `(open, close)` pairs.
    pub block_comments: Vec<(String, String)>,
    /// Multi-character (or single-character) operators, maximal munch.
    pub operators: Vec<String>,
    /// Identifiers reported with [`TokenKind::Keyword`].
    pub keywords: Vec<String>,
}

impl LexerConfig {
    /// Adds every entry of `other` not already present.
    pub fn extend(&mut self, other: &LexerConfig) {
        fn merge<T: Clone + PartialEq>(into: &mut Vec<T>, from: &[T]) {
            for item in from {
                if !into.contains(item) {
                    into.push(item.clone());
                }
            }
        }
        merge(&mut self.string_delimiters, &other.string_delimiters);
        merge(&mut self.multiline_strings, &other.multiline_strings);
        merge(&mut self.line_comments, &other.line_comments);
        merge(&mut self.block_comments, &other.block_comments);
        merge(&mut self.operators, &other.operators);
        merge(&mut self.keywords, &other.keywords);
    }

    pub(crate) fn validate(&self) -> Result<(), String> {
        let empty = self
            .string_delimiters
            .iter()
            .chain(&self.line_comments)
            .chain(&self.operators)
            .chain(self.block_comments.iter().flat_map(|(a, b)| [a, b]))
            .any(|s| s.is_empty() || s.chars().any(char::is_whitespace));
        if empty {
            return Err("delimiters, comment markers and operators must be non-empty and contain no whitespace".into());
        }
        Ok(())
    }
}

fn longest_first(items: &[String]) -> Vec<&str> {
    let mut v: Vec<&str> = items.iter().map(String::as_str).collect();
    v.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    v.dedup();
    v
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Tokenizes `text` under `config`.
pub fn tokenize_with(text: &str, config: &LexerConfig) -> Result<Vec<Token>, LexError> {
    let delimiters = longest_first(&config.string_delimiters);
    let line_comments = longest_first(&config.line_comments);
    let operators = longest_first(&config.operators);
    let mut block_comments: Vec<(&str, &str)> = config
        .block_comments
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    block_comments.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.cmp(b)));

    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;

    while pos < text.len() {
        let rest = &text[pos..];
        let c = rest.chars().next().expect("non-empty remainder");

        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }

        let start = pos;
        let kind;

        if let Some((open, close)) = block_comments.iter().find(|(o, _)| rest.starts_with(o)) {
            let body = &rest[open.len()..];
            let Some(end) = body.find(close) else {
                return Err(LexError {
                    offset: start,
                    detail: format!("unterminated block comment opened by `{open}`"),
                });
            };
            pos += open.len() + end + close.len();
            kind = TokenKind::Comment;
        } else if line_comments.iter().any(|m| rest.starts_with(m)) {
            pos += rest.find('\n').unwrap_or(rest.len());
            kind = TokenKind::Comment;
        } else if let Some(delim) = delimiters.iter().find(|d| rest.starts_with(**d)) {
            let multiline = config.multiline_strings.iter().any(|m| m == delim);
            pos = scan_string(text, start, delim, multiline)?;
            kind = TokenKind::String;
        } else if is_ident_start(c) {
            pos += rest
                .find(|ch: char| !is_ident_continue(ch))
                .unwrap_or(rest.len());
            kind = if config.keywords.iter().any(|k| k == &text[start..pos]) {
                TokenKind::Keyword
            } else {
                TokenKind::Identifier
            };
        } else if c.is_ascii_digit() {
            pos = scan_number(bytes, start);
            kind = TokenKind::Number;
        } else if let Some(op) = operators.iter().find(|o| rest.starts_with(**o)) {
            pos += op.len();
            kind = TokenKind::Operator;
        } else {
            pos += c.len_utf8();
            kind = if c.is_ascii_punctuation() {
                TokenKind::Punctuation
            } else {
                TokenKind::Other
            };
        }

        tokens.push(Token {
            kind,
            lexeme: text[start..pos].to_string(),
            span: (start, pos),
        });
    }
    Ok(tokens)
}

/// Returns the byte offset just past the closing delimiter.
fn scan_string(text: &str, start: usize, delim: &str, multiline: bool) -> Result<usize, LexError> {
    let mut pos = start + delim.len();
    loop {
        let rest = &text[pos..];
        if rest.starts_with(delim) {
            return Ok(pos + delim.len());
        }
        let mut chars = rest.chars();
        match chars.next() {
            None => break,
            Some('\\') => {
                // the escaped character is consumed verbatim, including a newline
                pos += 1;
                if let Some(escaped) = chars.next() {
                    pos += escaped.len_utf8();
                }
            }
            Some('\n') if !multiline => break,
            Some(ch) => pos += ch.len_utf8(),
        }
    }
    Err(LexError {
        offset: start,
        detail: format!("unterminated string opened by `{delim}`"),
    })
}

fn scan_number(bytes: &[u8], start: usize) -> usize {
    let digits = |mut p: usize, pred: fn(&u8) -> bool| {
        while p < bytes.len() && pred(&bytes[p]) {
            p += 1;
        }
        p
    };
    let at = |p: usize| bytes.get(p).copied();

    if at(start) == Some(b'0')
        && matches!(at(start + 1), Some(b'x' | b'X'))
        && at(start + 2).is_some_and(|b| b.is_ascii_hexdigit())
    {
        return digits(start + 2, u8::is_ascii_hexdigit);
    }

    let mut pos = digits(start, u8::is_ascii_digit);
    if at(pos) == Some(b'.') && at(pos + 1).is_some_and(|b| b.is_ascii_digit()) {
        pos = digits(pos + 1, u8::is_ascii_digit);
    }
    if matches!(at(pos), Some(b'e' | b'E')) {
        let sign = usize::from(matches!(at(pos + 1), Some(b'+' | b'-')));
        if at(pos + 1 + sign).is_some_and(|b| b.is_ascii_digit()) {
            pos = digits(pos + 1 + sign, u8::is_ascii_digit);
        }
    }
    pos
}
