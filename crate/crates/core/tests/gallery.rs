mod common;

use std::collections::BTreeMap;

use common::{config, notation, sample_root, write_gallery};
use notascope::gallery::{
    canonicalize, normalize, LoadError, NormalizerKind, NormalizerSpec, Violation,
};
use notascope::tokenizer::TokenizerRegistry;
use notascope::{load_gallery, Gallery};

fn two_by_three() -> notascope::gallery::GalleryConfig {
    config(
        vec![
            notation("na", "r", "R", "r", NormalizerKind::BuiltinWhitespace),
            notation(
                "nb",
                "python",
                ".py",
                "python",
                NormalizerKind::BuiltinWhitespace,
            ),
        ],
        &["bar", "line", "scatter"],
    )
}

#[test]
fn complete_tree_loads_every_cell() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = two_by_three();
    let mut cells = Vec::new();
    for n in ["na", "nb"] {
        for e in ["bar", "line", "scatter"] {
            cells.push((n, e, "plot(x)\n"));
        }
    }
    write_gallery(dir.path(), &cfg, &cells);
    let g = load_gallery(dir.path()).unwrap();
    assert_eq!(g.notations().len() * g.examples().len(), 6);
    for n in ["na", "nb"] {
        assert_eq!(g.specs(n).unwrap().len(), 3);
        let ids: Vec<&str> = g
            .specs(n)
            .unwrap()
            .iter()
            .map(|s| s.example_id.as_str())
            .collect();
        assert_eq!(ids, ["bar", "line", "scatter"]);
    }
    // the leading dot in ".py" is dropped
    assert_eq!(g.notation("nb").unwrap().file_extension, "py");
}

#[test]
fn config_violations_are_collected_and_missing_cells_named() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = two_by_three();
    cfg.examples.push("bar".into());
    cfg.notations.push(notation(
        "nc",
        "x",
        "x",
        "no-such-tokenizer",
        NormalizerKind::None,
    ));
    write_gallery(
        dir.path(),
        &cfg,
        &[
            ("na", "bar", "a"),
            ("na", "line", "a"),
            ("na", "scatter", "a"),
            ("nb", "bar", "a"),
            ("nb", "line", "a"),
        ],
    );
    let err = load_gallery(dir.path()).unwrap_err();
    let violations = err.violations();
    assert!(
        violations.contains(&Violation::DuplicateExample("bar".into())),
        "{err}"
    );
    assert!(violations.contains(&Violation::UnknownTokenizer {
        notation: "nc".into(),
        tokenizer: "no-such-tokenizer".into()
    }));
    // config problems stop the load before files are read
    assert!(!violations
        .iter()
        .any(|v| matches!(v, Violation::MissingSpec { .. })));

    cfg.examples.pop();
    cfg.notations.pop();
    write_gallery(dir.path(), &cfg, &[]);
    let err = load_gallery(dir.path()).unwrap_err();
    assert_eq!(
        err.violations(),
        [Violation::MissingSpec {
            notation: "nb".into(),
            example: "scatter".into()
        }]
    );
    assert!(err.to_string().contains("MissingSpec(nb, scatter)"));
}

#[test]
fn multiple_missing_cells_all_reported() {
    let dir = tempfile::tempdir().unwrap();
    write_gallery(dir.path(), &two_by_three(), &[("na", "bar", "x")]);
    let err = load_gallery(dir.path()).unwrap_err();
    assert_eq!(err.violations().len(), 5);
}

#[test]
fn crlf_is_canonicalized_and_counted_in_lf_form() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(
        vec![notation("n", "r", "R", "r", NormalizerKind::None)],
        &["a", "b"],
    );
    let crlf = "x <- 1\r\ny <- 2\r\n";
    write_gallery(dir.path(), &cfg, &[("n", "a", crlf), ("n", "b", "x\n")]);
    let g = load_gallery(dir.path()).unwrap();
    let spec = g.spec("n", "a").unwrap();
    assert!(!spec.normalized_text.contains('\r'));
    assert_eq!(spec.raw_text, crlf);
    // independent canonical form: drop every CR
    let expected = crlf.replace('\r', "");
    assert_eq!(spec.normalized_text, expected);
    assert_eq!(spec.byte_length, expected.len());
    assert_eq!(spec.byte_length, crlf.len() - 2);
}

#[test]
fn normalizer_examples() {
    let json = NormalizerSpec::of(NormalizerKind::BuiltinJson);
    assert_eq!(
        normalize(r#"{"b":1,"a":2}"#, &json).unwrap(),
        "{\n  \"a\": 2,\n  \"b\": 1\n}\n"
    );
    assert_eq!(
        normalize(r#"{"z":{"y":[{"b":0,"a":1}]},"a":null}"#, &json).unwrap(),
        "{\n  \"a\": null,\n  \"z\": {\n    \"y\": [\n      {\n        \"a\": 1,\n        \"b\": 0\n      }\n    ]\n  }\n}\n"
    );
    assert!(normalize("{not json", &json).is_err());

    let ws = NormalizerSpec::of(NormalizerKind::BuiltinWhitespace);
    assert_eq!(normalize("x = 1  \n", &ws).unwrap(), "x = 1\n");
    assert_eq!(normalize("a\t\nb  ", &ws).unwrap(), "a\nb\n");

    let none = NormalizerSpec::of(NormalizerKind::None);
    assert_eq!(normalize("keep  \n\n\n", &none).unwrap(), "keep  \n");
    assert_eq!(canonicalize("\u{feff}a\r\nb"), "a\nb\n");
    assert_eq!(canonicalize(""), "");
}

#[test]
fn builtin_normalizers_are_idempotent_on_sample_gallery() {
    let g = load_gallery(&sample_root()).unwrap();
    for n in g.notations() {
        for spec in g.specs(&n.id).unwrap() {
            let again = normalize(&spec.normalized_text, &n.normalizer).unwrap();
            assert_eq!(again, spec.normalized_text, "{}/{}", n.id, spec.example_id);
        }
    }
}

#[test]
fn normalizer_failure_is_a_violation() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(
        vec![notation(
            "j",
            "json",
            "json",
            "json",
            NormalizerKind::BuiltinJson,
        )],
        &["a", "b"],
    );
    write_gallery(dir.path(), &cfg, &[("j", "a", "{}"), ("j", "b", "{oops")]);
    let err = load_gallery(dir.path()).unwrap_err();
    assert!(matches!(
        err.violations(),
        [Violation::NormalizerFailed { notation, example, .. }] if notation == "j" && example == "b"
    ));
}

#[cfg(unix)]
#[test]
fn external_normalizer_pipes_through_command() {
    let dir = tempfile::tempdir().unwrap();
    let mut n = notation(
        "u",
        "text",
        "txt",
        "generic",
        NormalizerKind::ExternalCommand,
    );
    n.normalizer = NormalizerSpec::external("tr a-z A-Z");
    let cfg = config(vec![n.clone()], &["a", "b"]);
    write_gallery(dir.path(), &cfg, &[("u", "a", "hello"), ("u", "b", "x")]);
    let g = load_gallery(dir.path()).unwrap();
    assert_eq!(g.spec("u", "a").unwrap().normalized_text, "HELLO\n");

    n.normalizer = NormalizerSpec::external("false");
    let cfg = config(vec![n], &["a", "b"]);
    write_gallery(dir.path(), &cfg, &[]);
    let err = load_gallery(dir.path()).unwrap_err();
    assert_eq!(err.violations().len(), 2);
    assert!(err
        .violations()
        .iter()
        .all(|v| matches!(v, Violation::NormalizerFailed { .. })));
}

#[test]
fn lex_errors_fail_the_load() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(
        vec![notation(
            "p",
            "python",
            "py",
            "python",
            NormalizerKind::None,
        )],
        &["a", "b"],
    );
    write_gallery(
        dir.path(),
        &cfg,
        &[("p", "a", "x = 'open\n"), ("p", "b", "x = 1")],
    );
    let err = load_gallery(dir.path()).unwrap_err();
    assert!(matches!(err.violations(), [Violation::Lex { example, .. }] if example == "a"));
}

#[test]
fn invalid_config_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let err = load_gallery(dir.path()).unwrap_err();
    assert!(matches!(err, LoadError::Io { .. }));
    assert!(err.is_environmental());

    std::fs::write(dir.path().join("gallery.json"), "{\"dataset_name\": 3}").unwrap();
    let err = load_gallery(dir.path()).unwrap_err();
    assert!(
        matches!(err.violations(), [Violation::InvalidConfig(_)]),
        "{err}"
    );

    let cfg = config(
        vec![
            notation("img", "r", "R", "r", NormalizerKind::None),
            notation("ok", "r", "", "r", NormalizerKind::None),
        ],
        &["../escape"],
    );
    write_gallery(dir.path(), &cfg, &[]);
    let err = load_gallery(dir.path()).unwrap_err();
    assert_eq!(err.violations().len(), 3, "{err}");
    assert!(err
        .violations()
        .iter()
        .all(|v| matches!(v, Violation::InvalidConfig(_))));
}

#[test]
fn reload_is_byte_identical() {
    let a = load_gallery(&sample_root()).unwrap();
    let b = load_gallery(&sample_root()).unwrap();
    assert_eq!(a.content_hash(), b.content_hash());
    for n in a.notations() {
        assert_eq!(a.specs(&n.id).unwrap(), b.specs(&n.id).unwrap());
    }
}

fn hash_of(
    cfg: notascope::gallery::GalleryConfig,
    cells: &BTreeMap<(String, String), String>,
) -> String {
    Gallery::from_texts(cfg, cells, TokenizerRegistry::builtin())
        .unwrap()
        .content_hash()
        .to_string()
}

#[test]
fn content_hash_tracks_text_order_and_membership() {
    let cfg = config(
        vec![
            notation("a", "t", "txt", "generic", NormalizerKind::None),
            notation("b", "t", "txt", "generic", NormalizerKind::None),
        ],
        &["x", "y"],
    );
    let mut cells = BTreeMap::new();
    for n in ["a", "b"] {
        for e in ["x", "y"] {
            cells.insert((n.to_string(), e.to_string()), format!("{n}{e}"));
        }
    }
    let base = hash_of(cfg.clone(), &cells);
    assert_eq!(base, hash_of(cfg.clone(), &cells));

    let mut edited = cells.clone();
    edited.insert(("a".into(), "x".into()), "ax2".into());
    assert_ne!(base, hash_of(cfg.clone(), &edited));

    // extra trailing newlines collapse under canonicalization
    let mut spaced = cells.clone();
    spaced.insert(("a".into(), "x".into()), "ax\n\n".into());
    assert_eq!(base, hash_of(cfg.clone(), &spaced));

    let mut reordered = cfg.clone();
    reordered.examples.reverse();
    assert_ne!(base, hash_of(reordered, &cells));

    let mut swapped = cfg.clone();
    swapped.notations.reverse();
    assert_ne!(base, hash_of(swapped, &cells));

    // moving text between cells must change the hash even though the
    // multiset of texts is unchanged
    let mut moved = cells.clone();
    moved.insert(("a".into(), "x".into()), "ay".into());
    moved.insert(("a".into(), "y".into()), "ax".into());
    assert_ne!(base, hash_of(cfg.clone(), &moved));

    let mut fewer = cfg;
    fewer.examples.pop();
    let mut fewer_cells = cells;
    fewer_cells.retain(|(_, e), _| e == "x");
    assert_ne!(base, hash_of(fewer, &fewer_cells));
}

#[test]
fn images_are_optional_and_keyed_by_example() {
    let g = load_gallery(&sample_root()).unwrap();
    assert!(g.image("bar").unwrap().ends_with("img/bar.png"));
    assert!(g.image("heatmap").unwrap().ends_with("img/heatmap.svg"));
    assert!(g.image("boxplot").is_none());
    assert!(g.image("no-such-example").is_none());
}

#[test]
fn sample_gallery_shape() {
    let g = load_gallery(&sample_root()).unwrap();
    assert!(g.notations().len() >= 2);
    assert!(g.examples().len() >= 10);
    let ids: Vec<&str> = g.notations().iter().map(|n| n.id.as_str()).collect();
    assert!(
        ids.contains(&"json-vl") && ids.contains(&"python-alt"),
        "{ids:?}"
    );
    for n in g.notations() {
        assert_eq!(g.specs(&n.id).unwrap().len(), g.examples().len());
    }
}

#[test]
fn tokenizer_overrides_file_extends_registry() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(
        vec![notation("d", "dsl", "dsl", "dsl", NormalizerKind::None)],
        &["a", "b"],
    );
    write_gallery(
        dir.path(),
        &cfg,
        &[("d", "a", "x ~> y ; note"), ("d", "b", "x")],
    );
    assert!(matches!(
        load_gallery(dir.path()).unwrap_err().violations(),
        [Violation::UnknownTokenizer { .. }]
    ));

    std::fs::write(
        dir.path().join("tokenizers.json"),
        r#"{"dsl": {"operators": ["~>"], "line_comments": [";"]}}"#,
    )
    .unwrap();
    let g = load_gallery(dir.path()).unwrap();
    let lexemes: Vec<&str> = g.token_stream("d", "a").unwrap().lexemes().collect();
    assert_eq!(lexemes, ["x", "~>", "y"]);
    assert_ne!(g.registry().digest(), TokenizerRegistry::builtin().digest());
}
