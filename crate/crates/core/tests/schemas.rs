use std::path::PathBuf;

use jsonschema::JSONSchema;
use serde_json::Value;

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn load(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn compile(name: &str) -> JSONSchema {
    // Cross-file $refs are relative to the shared $id base.
    let mut opts = JSONSchema::options();
    opts.with_document("https://lpres.invalid/schemas/invariants.json".into(), load("invariants.json"));
    opts.compile(&load(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["lpres", "--format", "json"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = lpres::cli::run(argv, &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    let value = serde_json::from_str(&text)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}\n{}", String::from_utf8_lossy(&err)));
    (code, value)
}

fn assert_valid(schema: &str, args: &[&str], expected_code: i32) {
    let compiled = compile(schema);
    let (code, value) = run_json(args);
    assert_eq!(code, expected_code, "{args:?}");
    if let Err(errors) = compiled.validate(&value) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{args:?} violates {schema}:\n{}", msgs.join("\n"));
    };
}

#[test]
fn every_schema_compiles() {
    for entry in std::fs::read_dir(schema_dir()).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        if name.ends_with(".json") {
            compile(&name);
        }
    }
}

#[test]
fn enumerate_output() {
    assert_valid("enumerate.json", &["enumerate", "--entry", "grigorchuk", "--depth", "2"], 0);
    assert_valid("enumerate.json", &["enumerate", "--entry", "zn(3)", "--dedup", "exact"], 0);
}

#[test]
fn abelianize_output() {
    assert_valid("abelianize.json", &["abelianize", "--entry", "grigorchuk", "--depth", "3"], 0);
    assert_valid("abelianize.json", &["abelianize", "--entry", "hnn-example", "--depth", "2"], 0);
}

#[test]
fn wp_output() {
    assert_valid("wp.json", &["wp", "--entry", "grigorchuk", "a b a d a c"], 0);
    assert_valid("wp.json", &["wp", "gupta-sidki", "a t a^-1 t^-1"], 0);
}

#[test]
fn act_output() {
    assert_valid("act.json", &["act", "--entry", "grigorchuk", "b", "--level", "3"], 0);
    assert_valid("act.json", &["act", "--entry", "fabrykowski-gupta", "r^3", "--level", "2"], 0);
}

#[test]
fn order_output() {
    assert_valid("order.json", &["order", "sym(4)"], 0);
    assert_valid("order.json", &["order", "grigorchuk", "--level", "3"], 0);
}

#[test]
fn tc_output() {
    assert_valid("coset-table.json", &["tc", "--entry", "sym(4)", "--depth", "2"], 0);
}

#[test]
fn embed_output() {
    assert_valid("embed.json", &["embed", "--entry", "hnn-example"], 0);
}

#[test]
fn smallcanc_output() {
    assert_valid("smallcanc.json", &["smallcanc", "--generators", "a,b", "--words", "a b a^-1 b^-1"], 2);
    assert_valid(
        "smallcanc.json",
        &["smallcanc", "--generators", "a,b,c,d", "--words", "a b a^-1 b^-1 c d c^-1 d^-1"],
        0,
    );
}

#[test]
fn catalog_output() {
    assert_valid("catalog-list.json", &["catalog", "list"], 0);
    for name in lpres::catalog::default_names() {
        assert_valid("catalog-entry.json", &["catalog", "show", &name], 0);
    }
}

#[test]
fn verify_output() {
    assert_valid("verify-report.json", &["verify", "grigorchuk", "zn(3)", "lamplighter"], 0);
    // Known-defective relator set: failures still conform.
    assert_valid("verify-report.json", &["verify", "gupta-sidki", "--samples", "50"], 2);
}

#[test]
fn schema_rejects_malformed_report() {
    let compiled = compile("verify-report.json");
    let bad = serde_json::json!([{ "entry": "x", "check": "y", "status": "fail", "params": {} }]);
    assert!(!compiled.is_valid(&bad), "failure without witness or detail");
    let bad = serde_json::json!([{ "entry": "x", "check": "y", "status": "ok", "params": {} }]);
    assert!(!compiled.is_valid(&bad));
}
