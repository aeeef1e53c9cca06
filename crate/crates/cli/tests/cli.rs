use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        fs::write(&path, contents).unwrap();
        path
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lctpoly"))
        .args(args)
        .output()
        .unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn ideals(vars: usize, ideals: &[&str]) -> String {
    let list: Vec<String> = ideals
        .iter()
        .map(|m| format!("{{\"monomials\": {m}}}"))
        .collect();
    format!(
        "{{\"format\": 1, \"vars\": {vars}, \"ideals\": [{}]}}",
        list.join(", ")
    )
}

/// `(normal, offset)` pairs of a polytope output, sorted.
fn inequalities(v: &Value) -> Vec<(Vec<i64>, String)> {
    let mut rows: Vec<_> = v["inequalities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| {
            let normal = i["normal"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_i64().unwrap())
                .collect();
            (normal, i["offset"].as_str().unwrap().to_string())
        })
        .collect();
    rows.sort();
    rows
}

const CUSP_PAIR: &str = r#"{
  "format": 1,
  "resolution": {
    "kappa": [3, 6, 2, 1, 2, 6, 3, 0, 0],
    "alpha": [[5, 2], [10, 4], [4, 2], [2, 2], [2, 4], [4, 10], [2, 5], [1, 0], [0, 1]],
    "through_x": [0, 1, 2, 3, 4, 5, 6, 7, 8]
  }
}"#;

const PARABOLA: &str = r#"{
  "format": 1,
  "resolution": {"kappa": [0, 0, 1, 2], "alpha": [[1, 0], [0, 1], [1, 1], [2, 2]], "through_x": [0, 1, 2, 3]}
}"#;

#[test]
fn compute_unit_square() {
    let ws = Workspace::new();
    let f = ws.file("xy.json", &ideals(2, &["[[1, 0]]", "[[0, 1]]"]));
    let v = json(&run(&["compute", arg(&f)]));
    assert_eq!(v["dim"], 2);
    assert_eq!(v["nonnegativity"], true);
    assert_eq!(v["provenance"], "monomial");
    assert_eq!(
        inequalities(&v),
        vec![(vec![0, 1], "1".to_string()), (vec![1, 0], "1".to_string())]
    );
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn compute_cusp_pair_resolution() {
    let ws = Workspace::new();
    let f = ws.file("res.json", CUSP_PAIR);
    let v = json(&run(&["compute", arg(&f)]));
    // The unit-square sides are implied by the two slanted facets.
    assert_eq!(
        inequalities(&v),
        vec![
            (vec![4, 10], "7".to_string()),
            (vec![10, 4], "7".to_string())
        ]
    );
    assert!(v["vertices"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!(["1/2", "1/2"])));
}

#[test]
fn text_output_lists_inequalities() {
    let ws = Workspace::new();
    let f = ws.file("res.json", PARABOLA);
    let out = stdout(&run(&["--output", "text", "compute", arg(&f)]));
    assert!(out.contains("2*l1 + 2*l2 <= 3"), "{out}");
    assert!(out.contains("l1, l2 >= 0"), "{out}");
}

#[test]
fn input_errors_have_exit_code_two() {
    let ws = Workspace::new();
    let cases = [
        ws.file("empty.json", r#"{"format": 1, "vars": 2, "ideals": []}"#),
        ws.file("unknown.json", r#"{"format": 1, "vars": 1, "ideals": [{"monomials": [[1]]}], "colour": 3}"#),
        ws.file("version.json", r#"{"format": 2, "vars": 1, "ideals": [{"monomials": [[1]]}]}"#),
        ws.file("both.json", r#"{"format": 1, "vars": 1, "ideals": [{"monomials": [[1]]}], "resolution": {"kappa": [0], "alpha": [[1]], "through_x": [0]}}"#),
        ws.file("length.json", r#"{"format": 1, "vars": 2, "ideals": [{"monomials": [[1]]}]}"#),
        ws.file("garbage.json", "not json"),
    ];
    for f in &cases {
        assert_eq!(
            run(&["compute", arg(f)]).status.code(),
            Some(2),
            "{}",
            f.display()
        );
    }
    assert_eq!(
        run(&["compute", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn improper_ideal_exits_three() {
    let ws = Workspace::new();
    let f = ws.file("unit.json", &ideals(2, &["[[0, 0], [1, 0]]"]));
    let out = run(&["compute", arg(&f)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not proper"));
}

#[test]
fn thresholds() {
    let ws = Workspace::new();
    let cusp = ws.file("cusp.json", &ideals(2, &["[[2, 0], [0, 3]]"]));
    let m2 = ws.file("m2.json", &ideals(2, &["[[2, 0], [1, 1], [0, 2]]"]));
    let x = ws.file("x.json", &ideals(1, &["[[1]]"]));
    for (f, want) in [(&cusp, "5/6\n"), (&m2, "1\n"), (&x, "1\n")] {
        assert_eq!(stdout(&run(&["--output", "text", "lct", arg(f)])), want);
    }
    assert_eq!(json(&run(&["lct", arg(&cusp)]))["lct"], "5/6");

    let pair = ws.file("pair.json", &ideals(2, &["[[1, 0]]", "[[2, 0], [0, 3]]"]));
    assert_eq!(run(&["lct", arg(&pair)]).status.code(), Some(2));
    assert_eq!(
        json(&run(&["lct", arg(&pair), "--coordinate", "1"]))["lct"],
        "5/6"
    );

    let res = ws.file("res.json", CUSP_PAIR);
    assert_eq!(
        json(&run(&["lct", arg(&res), "--coordinate", "0"]))["lct"],
        "7/10"
    );
}

#[test]
fn distances() {
    let ws = Workspace::new();
    let xy = ws.file("xy.json", &ideals(2, &["[[1, 0]]", "[[0, 1]]"]));
    let parabola = ws.file("parabola.json", PARABOLA);
    let a = ws.file("a.json", &ideals(2, &["[[2, 0]]"]));
    let b = ws.file("b.json", &ideals(2, &["[[2, 0], [0, 4]]"]));
    let text = |p: &Path, q: &Path| stdout(&run(&["--output", "text", "distance", arg(p), arg(q)]));
    assert_eq!(text(&xy, &xy), "0\n");
    assert_eq!(text(&xy, &parabola), "1/8\n");
    assert_eq!(text(&a, &b), "1/16\n");
    assert_eq!(run(&["distance", arg(&xy), arg(&a)]).status.code(), Some(2));
}

#[test]
fn truncation_sequence_stabilizes() {
    let ws = Workspace::new();
    let f = ws.file("cusp.json", &ideals(2, &["[[2, 0], [0, 3]]"]));
    let v = json(&run(&[
        "sequence",
        arg(&f),
        "--mode",
        "truncate",
        "--prefix",
        "6",
        "--window",
        "3",
    ]));
    assert_eq!(v["stationary"], true);
    assert_eq!(v["m0"], 3);
    assert_eq!(
        inequalities(&v["candidate_limit"]),
        vec![(vec![6], "5".to_string())]
    );
    assert_eq!(v["terms"].as_array().unwrap().len(), 6);

    // With the default window of five the six-term prefix is not yet stable.
    let v = json(&run(&[
        "sequence",
        arg(&f),
        "--mode",
        "truncate",
        "--prefix",
        "6",
    ]));
    assert_eq!(v["stationary"], false);
}

#[test]
fn prism_sequence_is_not_stationary() {
    let ws = Workspace::new();
    let f = ws.file("xy.json", &ideals(2, &["[[1, 0]]", "[[0, 1]]"]));
    let v = json(&run(&[
        "sequence",
        arg(&f),
        "--mode",
        "ex11",
        "--prefix",
        "8",
    ]));
    assert_eq!(v["stationary"], false);
    assert_eq!(v["m0"], Value::Null);
    let profile: Vec<&str> = v["sq_distance_profile"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(
        profile,
        ["1", "1/4", "1/9", "1/16", "1/25", "1/36", "1/49", "1/64"]
    );
}

#[test]
fn sequence_usage_errors() {
    let ws = Workspace::new();
    let f = ws.file("xy.json", &ideals(2, &["[[1, 0]]", "[[0, 1]]"]));
    assert_eq!(
        run(&["sequence", arg(&f), "--mode", "ex11", "--prefix", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["sequence", arg(&f), "--mode", "sideways", "--prefix", "8"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_echoes_seed() {
    let v = json(&run(&[
        "verify", "--suite", "prop1", "--seed", "17", "--count", "10",
    ]));
    assert_eq!(v["seed"], 17);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "prop1");
    let text = stdout(&run(&[
        "--output", "text", "verify", "--suite", "oracle", "--seed", "4", "--count", "5",
    ]));
    assert!(text.contains("seed 4"), "{text}");
    assert_eq!(
        run(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let ws = Workspace::new();
    let f = ws.file("res.json", PARABOLA);
    let first = run(&["compute", arg(&f)]);
    let second = run(&["compute", arg(&f)]);
    assert_eq!(first.stdout, second.stdout);
    let again = ws.file("again.json", &stdout(&first));
    assert_eq!(run(&["compute", arg(&again)]).stdout, first.stdout);
}

#[test]
fn approximations_are_marked() {
    let ws = Workspace::new();
    let f = ws.file("cusp.json", &ideals(2, &["[[2, 0], [0, 3]]"]));
    let v = json(&run(&["--approx", "compute", arg(&f)]));
    assert!(v["approx"]["vertices"].is_array());
    assert_eq!(v["inequalities"][0]["offset"], "5");
    let v = json(&run(&["compute", arg(&f)]));
    assert!(v.get("approx").is_none());
}
