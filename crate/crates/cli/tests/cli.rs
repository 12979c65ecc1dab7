use std::process::{Command, Output};

use serde_json::Value;

fn edgemu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgemu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compute_c4_document() {
    let out = edgemu(&["compute", "--family", "cycle:4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["graph"]["n"], 4);
    assert_eq!(doc["graph"]["regular"], true);
    assert_eq!(doc["chi_prime"], 2);
    let table = doc["table"].as_array().unwrap();
    let rows: Vec<(u64, u64, u64)> = table
        .iter()
        .map(|r| (r["t"].as_u64().unwrap(), r["mu1"].as_u64().unwrap(), r["mu2"].as_u64().unwrap()))
        .collect();
    assert_eq!(rows, [(2, 4, 4), (3, 2, 4), (4, 1, 3)]);
    // witnesses are plain color arrays in edge order
    for r in table {
        assert_eq!(r["witness_max"].as_array().unwrap().len(), 4);
        assert_eq!(r["exact"], true);
    }
    let s = &doc["summary"];
    assert_eq!((s["mu11"].clone(), s["mu12"].clone(), s["mu21"].clone(), s["mu22"].clone()), (1.into(), 4.into(), 3.into(), 4.into()));
    assert_eq!(s["attaining_t"]["mu21"], 4);
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn single_t_and_summary_only() {
    let out = edgemu(&["compute", "--family", "complete:4", "--t", "5"]);
    let doc = json(&out);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(doc["table"].as_array().unwrap().len(), 1);
    assert_eq!(doc["table"][0]["mu2"], 3);
    assert!(doc["summary"].is_null());

    let doc = json(&edgemu(&["compute", "--family", "cycle:5", "--summary-only"]));
    assert!(doc["table"].is_null());
    assert_eq!(doc["summary"]["mu21"], 4);
}

#[test]
fn edge_list_input_keeps_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.txt");
    std::fs::write(&path, "# square\n10 30\n30 20\n20 40\n40 10\n").unwrap();
    let out = edgemu(&["compute", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["graph"]["vertex_labels"], serde_json::json!([10, 20, 30, 40]));
    assert_eq!(doc["summary"]["mu12"], 4);
}

#[test]
fn cache_hit_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let cache = cache.to_str().unwrap();
    let first = edgemu(&["compute", "--family", "complete_bipartite:3,3", "--cache", cache]);
    let second = edgemu(&["compute", "--family", "complete_bipartite:3,3", "--cache", cache]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let lines = std::fs::read_to_string(dir.path().join("cache.jsonl")).unwrap();
    assert_eq!(lines.lines().count(), 1);

    // different budget is a different key
    let third = edgemu(&["compute", "--family", "complete_bipartite:3,3", "--cache", cache, "--node-budget", "1000000000"]);
    assert_eq!(third.status.code(), Some(0));
    let lines = std::fs::read_to_string(dir.path().join("cache.jsonl")).unwrap();
    assert_eq!(lines.lines().count(), 2);
}

#[test]
fn verify_exit_codes() {
    let out = edgemu(&["verify", "--family", "cycle:3..5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cycle_values"));

    let out = edgemu(&["verify", "--family", "cycle:4", "--inject-corrupt", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    let bad = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["status"] == "fail")
        .unwrap();
    assert_eq!(bad["subject"], "synthetic:corrupted");
    assert!(String::from_utf8(out.stderr).unwrap().contains("FAIL"));
}

#[test]
fn verify_skips_oversized_graphs() {
    let out = edgemu(&["verify", "--family", "hypercube:4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["passed"], 0);
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["status"] == "skipped"));
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["compute", "--graph6", "C!"][..],
        &["compute", "--family", "cycle:2"],
        &["compute", "--family", "nonsense:3"],
        &["compute", "--family", "cycle:4", "--t", "9"],
        &["compute", "--family", "cycle:4", "--t-range", "4..3"],
        &["compute", "--graph6", "CA"],
        &["compute", "--family", "hypercube:4"],
        &["compute", "--edges", "/nonexistent/file"],
        &["verify"],
        &["bounds", "--r", "1", "--n", "5"],
        &["bounds", "--r", "3", "--n", "0"],
        &["bounds", "--family", "complete_bipartite:2,3"],
    ] {
        let out = edgemu(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = edgemu(&["compute", "--family", "complete:4", "--node-budget", "50"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bounds_values() {
    let doc = json(&edgemu(&["bounds", "--r", "3", "--n", "10", "--json"]));
    assert_eq!(doc["bound"], 7);
    assert_eq!(doc["n_minus_1"], 9);
    assert_eq!(doc["prop1_holds"], true);

    let doc = json(&edgemu(&["bounds", "--r", "2", "--n", "8", "--json"]));
    assert_eq!(doc["bound"], 7);

    let doc = json(&edgemu(&["bounds", "--family", "petersen", "--json"]));
    assert_eq!((doc["r"].clone(), doc["n"].clone(), doc["bound"].clone()), (3.into(), 10.into(), 7.into()));
}

#[test]
fn families_lists_generators() {
    let out = edgemu(&["families", "--json"]);
    let doc = json(&out);
    let names: Vec<&str> = doc.as_array().unwrap().iter().map(|f| f["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"moebius_ladder") && names.contains(&"petersen"));
}
