//! Binary-level contract tests: exit codes, stdout shapes, schema validation,
//! and determinism of emitted files.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_deltachi"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("spawn deltachi");
    let code = out.status.code().unwrap_or(-1);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    (code, text)
}

#[test]
fn classify_known_pairs() {
    let (code, text) = run(&["classify", "c5", "c5"]);
    assert_eq!(code, 0);
    assert!(text.contains("2/3"));

    let (code, text) = run(&["classify", "k3", "c5_blow2"]);
    assert_eq!(code, 0);
    assert!(text.trim().ends_with("3/4"));

    let (code, text) = run(&["classify", "petersen", "c5plus_blow2"]);
    assert_eq!(code, 0);
    assert!(text.trim().ends_with("7/9"));
}

#[test]
fn exit_code_contract() {
    // 2: invalid input (unknown graph; non-3-chromatic graph)
    let (code, _) = run(&["classify", "nosuch", "c5"]);
    assert_eq!(code, 2);
    let dir = tempdir();
    let c4 = dir.join("c4.g6");
    let line = deltachi_core::graph6::emit_graph6(&deltachi_core::Graph::cycle(4));
    std::fs::write(&c4, format!("{line}\n")).unwrap(); // bipartite: chi = 2
    let (code, _) = run(&["classify", c4.to_str().unwrap(), "c5"]);
    assert_eq!(code, 2);
    // 3: undecided under a tiny budget
    let (code, _) = run(&["classify", "c5", "c5", "--budget", "40"]);
    assert_eq!(code, 3);
}

#[test]
fn emb_and_threshold_values() {
    let (code, text) = run(&["emb", "petersen"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "3");
    let (code, text) = run(&["threshold", "c10star_blow3"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "1/3");
    let (code, text) = run(&["emb", "c5", "--dot"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("graph {"));
    assert!(text.contains("fillcolor"));
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("deltachi-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn construct_verify_pipeline() {
    let dir = tempdir();
    let out = dir.join("g1.cg6");
    let (code, _) = run(&[
        "construct",
        "g1",
        "--n",
        "120",
        "--slot",
        "E=mcgee",
        "--min-girth",
        "7",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, _) = run(&["verify", out.to_str().unwrap(), "k3_blow2", "k3_blow2"]);
    assert_eq!(code, 0, "g1 must be K3[2]-free both ways");
    // A found copy exits 1 and prints the embedding.
    let (code, text) = run(&["verify", out.to_str().unwrap(), "c5", "k3_blow2"]);
    assert_eq!(code, 1);
    assert!(text.contains("found c5"));
}

#[test]
fn construct_is_deterministic_per_seed() {
    let dir = tempdir();
    let a = dir.join("a.cg6");
    let b = dir.join("b.cg6");
    for path in [&a, &b] {
        let (code, _) = run(&[
            "construct",
            "g2",
            "--n",
            "180",
            "--alpha",
            "0.05",
            "--seed",
            "7",
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(
        std::fs::read(format!("{}.json", a.display())).unwrap(),
        std::fs::read(format!("{}.json", b.display())).unwrap()
    );
}

#[test]
fn reproduce_tables_self_test_names_the_cell() {
    let (code, _) = run(&["reproduce-tables"]);
    assert_eq!(code, 0);
    let (code, text) = run(&["reproduce-tables", "--corrupt", "1,3"]);
    assert_eq!(code, 1);
    assert!(
        text.contains("diff at (c10star_blow3, petersen)"),
        "diff must name the corrupted cell:\n{text}"
    );
}

// --- minimal JSON-schema validation (type / required / properties / items) ---

fn validate(value: &serde_json::Value, schema: &serde_json::Value, path: &str) -> Result<(), String> {
    if let Some(ty) = schema.get("type").and_then(|t| t.as_str()) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            other => return Err(format!("unknown schema type {other} at {path}")),
        };
        if !ok {
            return Err(format!("{path}: expected {ty}, got {value}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
        for key in required {
            let key = key.as_str().unwrap();
            if value.get(key).is_none() {
                return Err(format!("{path}: missing required key {key}"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(|p| p.as_object()) {
        for (key, sub) in props {
            if let Some(v) = value.get(key) {
                validate(v, sub, &format!("{path}.{key}"))?;
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(arr) = value.as_array() {
            for (i, v) in arr.iter().enumerate() {
                validate(v, items, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

fn schema(name: &str) -> serde_json::Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn json_outputs_validate_against_shipped_schemas() {
    let (code, text) = run(&["classify", "k3", "k3", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    validate(&value, &schema("classify.schema.json"), "classify").unwrap();
    assert_eq!(value["value"], "3/4");
    assert_eq!(value["emb"], serde_json::json!([2, 2]));

    let (code, text) = run(&["emb", "k3_blow2", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    validate(&value, &schema("emb.schema.json"), "emb").unwrap();
    assert_eq!(value["emb"], 0);

    let (code, text) = run(&["threshold", "c5", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    validate(&value, &schema("threshold.schema.json"), "threshold").unwrap();
    assert_eq!(value["value"], "0");

    let dir = tempdir();
    let out = dir.join("bh.g6");
    let (code, _) = run(&[
        "construct", "bh", "--m", "90", "--dim", "3", "--alpha", "0.1", "--seed", "7", "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let manifest: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(format!("{}.json", out.display())).unwrap(),
    )
    .unwrap();
    validate(&manifest, &schema("manifest.schema.json"), "manifest").unwrap();
    assert_eq!(manifest["order"], 90);
}
