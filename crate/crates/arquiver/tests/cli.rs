//! End-to-end checks of the installed binary: golden stdout lines, exit
//! codes, one-line diagnostics, and parseable machine formats.

use std::process::{Command, Output};

fn arquiver(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arquiver"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = arquiver(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: {out:?}"
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn golden_lines() {
    assert_eq!(
        stdout(&["census", "A3"]),
        "classes=8 adapted=4 conjecture=holds\n"
    );
    let arq = stdout(&["arq", "A3", "--orientation", "1>2,3>2", "--method", "all"]);
    assert!(arq.starts_with("methods agree: true; arrows=6\n"), "{arq}");
    assert_eq!(
        stdout(&["linearity", "A3", "--word", "2,1,2,3,2,1"]),
        "linear=false witness: mu3+mu1 != mu2\n"
    );
}

fn validate(schema_file: &str, document: &serde_json::Value) {
    let schema_path =
        concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schemas/").to_string() + schema_file;
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&schema_path).unwrap()).unwrap();
    let compiled = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = compiled
        .iter_errors(document)
        .map(|e| format!("{e}"))
        .collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:?}");
}

#[test]
fn machine_formats_parse_and_validate() {
    let census: serde_json::Value =
        serde_json::from_str(&stdout(&["census", "A3", "--format", "json"])).unwrap();
    assert_eq!(census["classes"], 8);
    assert_eq!(census["adapted"], 4);
    assert_eq!(census["conjecture"], "holds");
    assert_eq!(census["rows"].as_array().unwrap().len(), 8);
    validate("census.v1.schema.json", &census);

    let arq: serde_json::Value = serde_json::from_str(&stdout(&[
        "arq",
        "A3",
        "--word",
        "2,1,3,2,3,1",
        "--method",
        "all",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(arq["agree"], true);
    assert_eq!(arq["arrows"], 6);
    assert_eq!(arq["quiver"]["positions"].as_array().unwrap().len(), 6);
    validate("arq.v1.schema.json", &arq["quiver"]);
    let plain: serde_json::Value = serde_json::from_str(&stdout(&[
        "arq",
        "D4",
        "--orientation",
        "2>1,2>3,2>4",
        "--method",
        "ringel",
        "--format",
        "json",
    ]))
    .unwrap();
    validate("arq.v1.schema.json", &plain);

    let wiring: serde_json::Value = serde_json::from_str(&stdout(&[
        "wiring",
        "A3",
        "--word",
        "2,1,3,2,3,1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(wiring["strands"], 4);
    assert_eq!(wiring["zones"].as_array().unwrap().len(), 6);
    validate("wiring.v1.schema.json", &wiring);

    let dot = stdout(&[
        "arq",
        "A3",
        "--orientation",
        "1>2,2>3",
        "--method",
        "word",
        "--format",
        "dot",
    ]);
    assert!(dot.starts_with("digraph arq {"));
    assert!(dot.trim_end().ends_with('}'));

    let svg = stdout(&["wiring", "A3", "--word", "2,1,3,2,3,1", "--format", "svg"]);
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn text_surfaces() {
    let roots = stdout(&["roots", "D4"]);
    assert!(roots.starts_with("type D4\npositive roots 12\n"));
    let order = stdout(&["order", "A3", "--word", "3,2,1,3,2,3"]);
    assert!(order.contains("convex true"));
    let chamber = stdout(&["chamber", "A3", "--word", "2,1,3,2,3,1"]);
    assert!(chamber.contains("level 3 tail -w1"));
    let adapted = stdout(&["adapted", "A3", "--word", "2,1,3,2,3,1"]);
    assert_eq!(adapted, "adapted true orientation 1>2,3>2\n");
    let wiring = stdout(&["wiring", "A2", "--word", "1,2,1"]);
    assert!(wiring.contains("J(Z1)={2}"), "{wiring}");
}

#[test]
fn failures_exit_nonzero_with_one_line_diagnostics() {
    for args in [
        &["roots", "Q7"][..],
        &["order", "A3", "--word", "1,1"][..],
        &["order", "A3", "--word", "1,oops"][..],
        &["linearity", "A3", "--word", "1,2"][..],
        &["arq", "A3"][..],
        &["arq", "A3", "--word", "2,1,2,3,2,1", "--method", "ringel"][..],
        &["arq", "A3", "--orientation", "1>2", "--method", "word"][..],
        &[
            "arq",
            "A3",
            "--orientation",
            "1>2,2>1,2>3",
            "--method",
            "word",
        ][..],
        &["wiring", "D4", "--word", "1,2"][..],
        &["wiring", "A3", "--word", "2,1,3,2,3,1", "--format", "dot"][..],
        &["census", "A5", "--timeout", "0"][..],
    ] {
        let out = arquiver(args);
        assert!(!out.status.success(), "expected failure for {args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(
            err.lines().count(),
            1,
            "one-line diagnostic for {args:?}: {err}"
        );
        assert!(err.starts_with("error: "), "{err}");
        assert!(out.stdout.is_empty(), "no partial stdout for {args:?}");
    }
}
