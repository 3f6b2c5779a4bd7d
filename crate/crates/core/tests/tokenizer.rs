mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{gallery_from, sample_root};
use notascope::load_gallery;
use notascope::tokenizer::{
    tokenize_with, vocabulary, vocabulary_of, Token, TokenKind, TokenStream, TokenizerRegistry,
    GENERIC_TOKENIZER,
};
use proptest::prelude::*;

fn generic(text: &str) -> Vec<Token> {
    TokenizerRegistry::builtin()
        .tokenize(GENERIC_TOKENIZER, text)
        .unwrap()
}

fn lexemes(tokens: &[Token]) -> Vec<&str> {
    tokens.iter().map(|t| t.lexeme.as_str()).collect()
}

fn stream(tokens: Vec<Token>) -> TokenStream {
    TokenStream {
        notation_id: "n".into(),
        example_id: "e".into(),
        tokens,
    }
}

#[test]
fn lexical_examples() {
    let t = generic("f(x)");
    let kinds: Vec<TokenKind> = t.iter().map(|t| t.kind).collect();
    assert_eq!(lexemes(&t), ["f", "(", "x", ")"]);
    assert_eq!(
        kinds,
        [
            TokenKind::Identifier,
            TokenKind::Punctuation,
            TokenKind::Identifier,
            TokenKind::Punctuation
        ]
    );

    let t = generic("geom_point");
    assert_eq!(t.len(), 1);
    assert_eq!(
        (t[0].kind, t[0].lexeme.as_str()),
        (TokenKind::Identifier, "geom_point")
    );

    let t = generic("\"a b\"");
    assert_eq!(t.len(), 1);
    assert_eq!(
        (t[0].kind, t[0].lexeme.as_str()),
        (TokenKind::String, "\"a b\"")
    );
}

#[test]
fn numbers_keep_their_textual_form() {
    assert_eq!(
        lexemes(&generic("1 1.0 1e3 2.5E-2 0x1F")),
        ["1", "1.0", "1e3", "2.5E-2", "0x1F"]
    );
    assert!(generic("1 1.0").iter().all(|t| t.kind == TokenKind::Number));
}

#[test]
fn unterminated_string_is_a_lex_error_with_offset() {
    let err = TokenizerRegistry::builtin()
        .tokenize("json", "{\"a\": \"open")
        .unwrap_err();
    assert_eq!(err.offset, 6);
}

#[test]
fn comments_are_single_tokens_excluded_from_lexemes() {
    let registry = TokenizerRegistry::builtin();
    let tokens = registry
        .tokenize("python", "x = 1  # set x\ny = 2\n")
        .unwrap();
    let comments: Vec<&Token> = tokens
        .iter()
        .filter(|t| t.kind == TokenKind::Comment)
        .collect();
    assert_eq!(comments.len(), 1);
    assert_eq!(comments[0].lexeme, "# set x");
    let s = stream(tokens);
    assert_eq!(
        s.lexemes().collect::<Vec<_>>(),
        ["x", "=", "1", "y", "=", "2"]
    );

    let tokens = registry
        .tokenize("javascript", "a /* b\nc */ d // e")
        .unwrap();
    assert_eq!(lexemes(&tokens), ["a", "/* b\nc */", "d", "// e"]);
}

#[test]
fn language_operators_use_maximal_munch() {
    let registry = TokenizerRegistry::builtin();
    assert_eq!(
        lexemes(
            &registry
                .tokenize("r", "cars |> subset(mpg >= 20) %>% head")
                .unwrap()
        ),
        ["cars", "|>", "subset", "(", "mpg", ">=", "20", ")", "%>%", "head"]
    );
    assert_eq!(
        lexemes(&registry.tokenize("python", "a **= b // c").unwrap()),
        ["a", "**=", "b", "//", "c"]
    );
    assert_eq!(
        lexemes(&registry.tokenize("javascript", "a === b").unwrap()),
        ["a", "===", "b"]
    );
}

#[test]
fn json_fragments_stay_single_string_tokens() {
    let tokens = TokenizerRegistry::builtin()
        .tokenize("json", r#"{"filter": "datum.x > 2 && datum.y < 3"}"#)
        .unwrap();
    assert_eq!(
        lexemes(&tokens),
        [
            "{",
            "\"filter\"",
            ":",
            "\"datum.x > 2 && datum.y < 3\"",
            "}"
        ]
    );
}

fn check_stream_contract(text: &str, tokens: &[Token]) {
    let mut previous_end = 0;
    for t in tokens {
        let (start, end) = t.span;
        assert!(
            start >= previous_end && start < end,
            "spans must increase: {tokens:?}"
        );
        assert_eq!(&text[start..end], t.lexeme);
        assert!(!t.lexeme.chars().all(char::is_whitespace));
        // gaps between tokens hold only whitespace
        assert!(
            text[previous_end..start].chars().all(char::is_whitespace),
            "uncovered text in {text:?}"
        );
        previous_end = end;
    }
    assert!(text[previous_end..].chars().all(char::is_whitespace));
}

#[test]
fn sample_gallery_streams_cover_text() {
    let g = load_gallery(&sample_root()).unwrap();
    for n in g.notations() {
        for s in g.token_streams(&n.id).unwrap() {
            let text = &g.spec(&n.id, &s.example_id).unwrap().normalized_text;
            check_stream_contract(text, &s.tokens);
        }
    }
}

#[test]
fn vocabulary_examples() {
    let g = gallery_from(&[vec!["f(x)".into(), "g(x)".into()]]);
    let v = vocabulary(&g, "n0").unwrap();
    assert_eq!(v.unique_count, 5);
    assert_eq!(v.frequency_histogram, BTreeMap::from([(1, 2), (2, 3)]));
    assert_eq!(v.total_occurrences(), 8);

    let g = gallery_from(&[vec!["".into(), "".into()]]);
    let v = vocabulary(&g, "n0").unwrap();
    assert_eq!(v.unique_count, 0);
    assert!(v.frequency_histogram.is_empty());

    assert!(vocabulary(&g, "missing").is_err());
}

#[test]
fn string_and_identifier_with_same_text_are_distinct() {
    let tokens = TokenizerRegistry::builtin()
        .tokenize("r", "mean(\"mean\")")
        .unwrap();
    let v = vocabulary_of("n", [&stream(tokens)]);
    assert!(v.lexeme_counts.contains_key("mean"));
    assert!(v.lexeme_counts.contains_key("\"mean\""));
}

/// Independent count for the JSON notation: one regex alternative per JSON
/// lexical class, then set-count the matches.
#[test]
fn json_vocabulary_matches_regex_oracle() {
    let g = load_gallery(&sample_root()).unwrap();
    let re = regex::Regex::new(
        r#""(?:[^"\\]|\\.)*"|\d+(?:\.\d+)?(?:[eE][+-]?\d+)?|[A-Za-z_][A-Za-z0-9_]*|\S"#,
    )
    .unwrap();
    let mut set = BTreeSet::new();
    let mut total = 0;
    for spec in g.specs("json-vl").unwrap() {
        for m in re.find_iter(&spec.normalized_text) {
            set.insert(m.as_str().to_string());
            total += 1;
        }
    }
    let v = vocabulary(&g, "json-vl").unwrap();
    assert_eq!(v.unique_count, set.len());
    assert_eq!(v.total_occurrences(), total);
    assert_eq!(
        v.lexeme_counts.keys().cloned().collect::<BTreeSet<_>>(),
        set
    );
}

#[test]
fn vocabulary_invariants_on_sample_gallery() {
    let g = load_gallery(&sample_root()).unwrap();
    for n in g.notations() {
        let v = vocabulary(&g, &n.id).unwrap();
        assert_eq!(v.unique_count, v.lexeme_counts.len());
        assert_eq!(
            v.unique_count,
            v.frequency_histogram.values().sum::<usize>()
        );
        let weighted: usize = v.frequency_histogram.iter().map(|(k, c)| k * c).sum();
        let occurrences: usize = g
            .token_streams(&n.id)
            .unwrap()
            .iter()
            .map(|s| s.lexemes().count())
            .sum();
        assert_eq!(weighted, occurrences);
        assert!(v.unique_count <= occurrences);
    }
}

#[test]
fn vocabulary_ignores_order_and_duplicates() {
    let texts: Vec<String> = ["a + b", "c(d)", "e == f"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let base = vocabulary(&gallery_from(std::slice::from_ref(&texts)), "n0")
        .unwrap()
        .unique_count;

    let mut reversed = texts.clone();
    reversed.reverse();
    assert_eq!(
        vocabulary(&gallery_from(&[reversed]), "n0")
            .unwrap()
            .unique_count,
        base
    );

    let mut duplicated = texts.clone();
    duplicated.push(texts[1].clone());
    assert_eq!(
        vocabulary(&gallery_from(&[duplicated]), "n0")
            .unwrap()
            .unique_count,
        base
    );
}

#[test]
fn tokenization_is_deterministic() {
    let g = load_gallery(&sample_root()).unwrap();
    let registry = TokenizerRegistry::builtin();
    for n in g.notations() {
        for s in g.token_streams(&n.id).unwrap() {
            let text = &g.spec(&n.id, &s.example_id).unwrap().normalized_text;
            assert_eq!(registry.tokenize(&n.tokenizer_id, text).unwrap(), s.tokens);
        }
    }
}

#[test]
fn override_registry_is_rejected_when_malformed() {
    let mut registry = TokenizerRegistry::builtin();
    let bad: BTreeMap<String, notascope::tokenizer::LexerConfig> =
        serde_json::from_str(r#"{"x": {"string_delimiters": [""]}}"#).unwrap();
    assert!(registry.apply_overrides(&bad).is_err());
    assert!(
        serde_json::from_str::<BTreeMap<String, notascope::tokenizer::LexerConfig>>(
            r#"{"x": {"nope": 1}}"#
        )
        .is_err()
    );
}

fn generic_source() -> impl Strategy<Value = String> {
    let piece = prop_oneof![
        "[A-Za-z_][A-Za-z0-9_]{0,6}",
        "[0-9]{1,4}(\\.[0-9]{1,3})?",
        "\"[a-z ]{0,5}\"",
        "'[a-z]{0,3}'",
        prop::sample::select(vec![
            "==", "!=", "<=", "->", "::", "(", ")", "{", "}", ",", ";", "+", "-", "*", "@", "é",
            "→"
        ])
        .prop_map(str::to_string),
    ];
    let sep = prop::sample::select(vec!["", " ", "\n", "\t", "  "]);
    prop::collection::vec((piece, sep), 0..30)
        .prop_map(|parts| parts.into_iter().map(|(p, s)| format!("{p}{s}")).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn generic_round_trip_through_single_spaces(text in generic_source()) {
        let registry = TokenizerRegistry::builtin();
        let first = registry.tokenize(GENERIC_TOKENIZER, &text).unwrap();
        check_stream_contract(&text, &first);
        let joined = lexemes(&first).join(" ");
        let second = registry.tokenize(GENERIC_TOKENIZER, &joined).unwrap();
        prop_assert_eq!(lexemes(&first), lexemes(&second));
    }

    #[test]
    fn any_text_either_lexes_with_coverage_or_errors(text in "\\PC{0,60}") {
        let config = TokenizerRegistry::builtin().get("python").unwrap().clone();
        if let Ok(tokens) = tokenize_with(&text, &config) {
            check_stream_contract(&text, &tokens);
        }
    }
}
