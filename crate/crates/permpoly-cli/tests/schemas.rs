//! Validates live JSON outputs against the schemas shipped in schemas/.
//!
//! The validator below covers the subset of JSON Schema those files use:
//! type, properties, required, items, enum, oneOf, pattern (digit runs
//! only), and same-directory $ref.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn load_schema(name: &str) -> Value {
    let path = schema_dir().join(name);
    serde_json::from_str(
        &std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}")),
    )
    .unwrap()
}

fn check_type(expected: &str, value: &Value) -> bool {
    match expected {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "integer" => value.is_i64() || value.is_u64(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        other => panic!("unsupported type '{other}'"),
    }
}

fn validate(schema: &Value, value: &Value, at: &str, dir: &Path) {
    if let Some(reference) = schema.get("$ref").and_then(Value::as_str) {
        let resolved: Value = serde_json::from_str(
            &std::fs::read_to_string(dir.join(reference)).expect("referenced schema exists"),
        )
        .unwrap();
        return validate(&resolved, value, at, dir);
    }
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        let matched = options
            .iter()
            .filter(|option| {
                let ok = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
                    validate(option, value, at, dir)
                }));
                ok.is_ok()
            })
            .count();
        assert!(matched >= 1, "{at}: no oneOf branch matched {value}");
        return;
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        assert!(allowed.contains(value), "{at}: {value} not in {allowed:?}");
        return;
    }
    if let Some(t) = schema.get("type").and_then(Value::as_str) {
        assert!(check_type(t, value), "{at}: expected {t}, got {value}");
    }
    if let Some(pattern) = schema.get("pattern").and_then(Value::as_str) {
        // only the decimal-integer pattern is used
        assert_eq!(pattern, "^-?[0-9]+$");
        let s = value.as_str().unwrap();
        let body = s.strip_prefix('-').unwrap_or(s);
        assert!(
            !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit()),
            "{at}: '{s}' is not a decimal integer"
        );
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required {
            let key = key.as_str().unwrap();
            assert!(
                value.get(key).is_some(),
                "{at}: missing required key '{key}' in {value}"
            );
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, sub) in props {
            if let Some(v) = value.get(key) {
                validate(sub, v, &format!("{at}.{key}"), dir);
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(arr) = value.as_array() {
            for (i, v) in arr.iter().enumerate() {
                validate(items, v, &format!("{at}[{i}]"), dir);
            }
        }
    }
}

fn run_json(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_permpoly"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.code() == Some(0) || out.status.code() == Some(1),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn poly_output_matches_schema() {
    let schema = load_schema("poly.json");
    let dir = schema_dir();
    let v = run_json(&["poly", "--family", "c3bar:2", "--json"]);
    validate(&schema, &v, "poly", &dir);
    let v = run_json(&["poly", "--g6", "Bw", "--kind", "laplacian", "--json"]);
    validate(&schema, &v, "poly-single", &dir);
}

#[test]
fn family_output_matches_schema() {
    let schema = load_schema("family.json");
    let v = run_json(&["family", "--family", "fig4_t2", "--json"]);
    validate(&schema, &v, "family", &schema_dir());
}

#[test]
fn closed_form_output_matches_schema() {
    let schema = load_schema("closed_form.json");
    let v = run_json(&["closed-form", "--family", "spider:3,2", "--json"]);
    validate(&schema, &v, "closed-form", &schema_dir());
}

#[test]
fn invariants_output_matches_schema() {
    let schema = load_schema("invariants.json");
    let dir = schema_dir();
    let v = run_json(&["invariants", "--family", "btree:2", "--kind", "signless"]);
    validate(&schema, &v, "invariants", &dir);
    // both kinds: object keyed by kind
    let v = run_json(&["invariants", "--family", "cycle:5"]);
    for kind in ["laplacian", "signless"] {
        validate(&schema, &v[kind], kind, &dir);
    }
}

#[test]
fn degsys_output_matches_schema() {
    let schema = load_schema("degsys.json");
    let v = run_json(&[
        "degsys",
        "--family",
        "corona_cycle_k1:3",
        "--kind",
        "laplacian",
        "--include-nongraphical",
    ]);
    validate(&schema, &v, "degsys", &schema_dir());
}

#[test]
fn mates_output_matches_schema() {
    let schema = load_schema("mates.json");
    let v = run_json(&["mates", "--family", "path:5", "--kinds", "both"]);
    validate(&schema, &v, "mates", &schema_dir());
}

#[test]
fn errata_and_verify_match_schema() {
    let schema = load_schema("errata.json");
    let dir = schema_dir();
    let v = run_json(&["errata", "--json"]);
    validate(&schema, &v, "errata", &dir);
    assert!(v.as_array().unwrap().len() > 100);
    let v = run_json(&["verify", "--family", "btree", "--n-range", "1:3", "--json"]);
    validate(&schema, &v, "verify", &dir);
}
