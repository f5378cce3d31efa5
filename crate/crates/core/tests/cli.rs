//! The `subcx` binary: output formats and exit codes.

use std::process::Command;

fn subcx(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_subcx")).args(args).output().expect("binary runs");
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn profile_u_csv() {
    let (code, out, err) = subcx(&["profile", "--builtin", "U", "-n", "5", "--format", "csv"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "n,p,s,exact\n0,1,1,true\n1,2,1,true\n2,3,1,true\n3,4,1,true\n4,5,1,true\n5,6,1,true\n");
}

#[test]
fn profile_akb_and_thue_morse() {
    let (_, out, _) = subcx(&["profile", "--builtin", "AKB", "-n", "5"]);
    let p: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(p, ["1", "2", "2", "2", "2", "2"]);
    let (_, out, _) = subcx(&["profile", "--builtin", "THUEMORSE", "-n", "3", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    let p: Vec<u64> = rows.as_array().unwrap().iter().map(|r| r["p"].as_u64().unwrap()).collect();
    assert_eq!(p, [1, 2, 4, 6]);
    assert!(rows.as_array().unwrap().iter().all(|r| r["exact"] == false));
}

#[test]
fn classify_akb() {
    let (code, out, _) = subcx(&["classify", "--builtin", "AKB"]);
    assert_eq!(code, 0);
    assert!(out.starts_with(r#"{"verdict":"bounded","bound":2,"#), "{out}");
}

#[test]
fn decompose_u_prints_witness_and_exits_two() {
    let (code, out, err) = subcx(&["decompose", "--builtin", "U"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    let witness: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(witness["verdict"], "unbounded");
}

#[test]
fn decompose_example_spec() {
    let spec = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/ab_star_a.json");
    for mode in ["formal", "sampled"] {
        let (code, out, _) = subcx(&["decompose", "--input", spec, "--mode", mode]);
        assert_eq!(code, 0);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["cover_check"]["result"]["covered"], true);
        assert_eq!(doc["bound"], 2);
    }
}

#[test]
fn malformed_input_exits_two_without_stdout() {
    let dir = std::env::temp_dir().join(format!("subcx-bin-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"alphabet":["a"],"source":{"type":"finite","words":["b"]}}"#).unwrap();
    let (code, out, err) = subcx(&["profile", "--input", bad.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert_eq!(err.lines().count(), 1, "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_writes_report_file_and_summary() {
    let dir = std::env::temp_dir().join(format!("subcx-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reports.jsonl");
    let (code, out, _) = subcx(&["verify", "--suite", "growth", "--seed", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("suite=growth seed=7 ") && last.contains(" fail=0 "), "{out}");
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().all(|l| l.starts_with(r#"{"check":"growth_bound"#)));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn catalog_json() {
    let (code, out, _) = subcx(&["catalog", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["U", "AAABBB", "BAAB", "MIX", "AKB", "FIBONACCI", "THUEMORSE"]);
}
