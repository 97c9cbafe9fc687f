use std::process::{Command, Output};

fn lpres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpres")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    serde_json::from_str(&stdout(&lpres(&a))).unwrap()
}

#[test]
fn wp_defining_relators_are_trivial() {
    for w in ["a^2", "b^2", "b c d", "[d, d^a]", "(a d)^4"] {
        let o = lpres(&["wp", "grigorchuk", w]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o).trim(), "trivial", "{w}");
    }
    let o = lpres(&["wp", "grigorchuk", "a b"]);
    assert_eq!(stdout(&o).trim(), "nontrivial");
}

#[test]
fn wp_agrees_with_level_action() {
    // (ad)^4 = 1 but (ad)^2 moves a vertex at level 3
    let v = json(&["act", "--entry", "grigorchuk", "(a d)^2", "--level", "3"]);
    assert!(v["first_nontrivial_level"].as_u64().is_some());
    assert_eq!(json(&["wp", "grigorchuk", "(a d)^2"])["trivial"], false);
}

#[test]
fn order_of_symmetric_groups() {
    assert_eq!(json(&["order", "sym(4)"])["order"], "24");
    assert_eq!(json(&["order", "sym(5)"])["order"], "120");
    assert_eq!(json(&["order", "sym-transpositions(4)"])["order"], "24");
}

#[test]
fn tc_subgroup_index() {
    // <s1> has order 2 in S4
    let v = json(&["tc", "--entry", "sym(4)", "--depth", "3", "--subgroup", "s1"]);
    assert_eq!(v["cosets"], 12);
}

#[test]
fn file_target_matches_entry_target() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../groups/grigorchuk.grp");
    let a = json(&["abelianize", "--file", path, "--depth", "3"]);
    let b = json(&["abelianize", "--entry", "grigorchuk", "--depth", "3"]);
    assert_eq!(a["invariants"], b["invariants"]);
}

#[test]
fn inline_file_with_parse_error_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.grp");
    std::fs::write(&path, "group g {\n  generators: a, b;\n  fixed: a^2 q;\n}\n").unwrap();
    let o = lpres(&["enumerate", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&lpres(&["frobnicate"])), 1);
    assert_eq!(code(&lpres(&["enumerate", "--entry", "no-such-group"])), 1);
    assert_eq!(code(&lpres(&["order", "sym(5)", "--depth", "8", "--max-cosets", "1000"])), 3);
    assert_eq!(code(&lpres(&["verify", "grigorchuk", "zn(3)"])), 0);
    assert_eq!(code(&lpres(&["smallcanc", "--generators", "a,b", "--words", "a b a^-1 b^-1"])), 2);
}

#[test]
fn catalog_export_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let o = lpres(&["catalog", "export", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let shipped = concat!(env!("CARGO_MANIFEST_DIR"), "/../../groups");
    for f in std::fs::read_dir(shipped).unwrap() {
        let f = f.unwrap();
        let exported = std::fs::read_to_string(dir.path().join(f.file_name())).unwrap();
        assert_eq!(exported, std::fs::read_to_string(f.path()).unwrap());
    }
}

#[test]
fn embed_output_is_a_loadable_group_file() {
    let v = json(&["embed", "--entry", "hnn-example"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.grp");
    std::fs::write(&path, v["group_file"].as_str().unwrap()).unwrap();
    let p = path.to_str().unwrap();
    // x^6 = y^6 = 1 from the conjugation relators, then (xy)^7 = xy: Z/6 x Z
    let ab = json(&["abelianize", "--file", p, "--depth", "0"]);
    assert_eq!(ab["invariants"]["text"], "Z/6 x Z");
    // result has fixed relators, so it is not ascending
    let o = lpres(&["embed", "--file", p]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not ascending"));
}
