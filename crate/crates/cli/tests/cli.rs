//! End-to-end tests of the command-line surface: exact export bytes,
//! report schema, exit codes, and the order-cap environment override.

use std::process::{Command, Output};

fn starring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starring"))
        .args(args)
        .env_remove("STARRING_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn edgelist_of_z6_is_exact() {
    let out = starring(&["graph", "Z6", "--kind", "strong", "--format", "edgelist"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2 3\n3 4\n");
}

#[test]
fn complement_edgelist_of_z6() {
    let out = starring(&[
        "graph",
        "Z6",
        "--kind",
        "strong",
        "--complement",
        "--format",
        "edgelist",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2 4\n");
}

#[test]
fn dot_output_is_deterministic_and_ordered() {
    let a = starring(&["graph", "Z2 x Z4", "--format", "dot"]);
    let b = starring(&["graph", "Z2 x Z4", "--format", "dot"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    let decl_order: Vec<usize> = ["\"(0,1)\";", "\"(0,2)\";", "\"(0,3)\";", "\"(1,0)\";", "\"(1,2)\";"]
        .iter()
        .map(|needle| text.find(needle).expect("vertex declared"))
        .collect();
    assert!(decl_order.windows(2).all(|w| w[0] < w[1]), "ascending vertex order");
    assert!(text.contains("\"(0,1)\" -- \"(1,0)\";"));
}

#[test]
fn graph_json_export_lists_vertices_and_edges() {
    let out = starring(&["graph", "Z6", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["spec"], "Z6");
    assert_eq!(v["kind"], "strong");
    assert_eq!(v["vertices"], serde_json::json!(["2", "3", "4"]));
    assert_eq!(v["edges"], serde_json::json!([["2", "3"], ["3", "4"]]));
}

#[test]
fn graph_output_to_file() {
    let dir = std::env::temp_dir().join(format!("starring-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z6.edges");
    let out = starring(&[
        "graph",
        "Z6",
        "--format",
        "edgelist",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "2 3\n3 4\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn analyze_m2z6_identity_reports_cp_and_bipartition() {
    let out = starring(&["analyze", "M2(Z6)@id"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("spec: M2(Z6)@id\n"), "spec echoed verbatim");
    assert!(text.contains("central projections: 4"));
    assert!(text.contains("complete bipartite: K_{80,15}"));
    assert!(text.contains("pseudo-involution"));
    assert!(text.contains("p.q.-baer=yes"));
}

#[test]
fn analyze_json_has_frozen_schema_fields() {
    let out = starring(&["analyze", "Z6", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["spec"], "Z6");
    assert_eq!(v["order"], 6);
    assert_eq!(v["involution_proper"], true);
    assert_eq!(v["classification"]["is_pq_baer"], true);
    assert_eq!(v["cp"]["count"], 4);
    assert_eq!(v["graphs"]["strong"]["edges"], 2);
    assert_eq!(v["graphs"]["complement"]["connected"], false);
    assert_eq!(v["checks"].as_array().unwrap().len(), 23);
}

#[test]
fn verify_z4_single_theorem_exits_zero() {
    let out = starring(&["verify", "Z4", "--theorem", "PROP-NONZD-SUM"]);
    assert!(out.status.success(), "no violated result, so exit 0");
    assert!(stdout(&out).contains("PROP-NONZD-SUM"));
}

#[test]
fn verify_all_on_z6_exits_zero_and_lists_everything() {
    let out = starring(&["verify", "Z6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 24, "spec header plus 23 check lines");
    assert!(text.contains("TH-CUT-ATOM"));
}

#[test]
fn verify_rejects_unknown_theorem_id() {
    let out = starring(&["verify", "Z6", "--theorem", "TH-NOPE"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_carries_check_statuses() {
    let out = starring(&["verify", "Z3 x Z3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["spec"], "Z3 x Z3");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 23);
    let z3z3 = checks
        .iter()
        .find(|c| c["id"] == "TH-Z3Z3")
        .expect("the catalog includes TH-Z3Z3");
    assert_eq!(z3z3["status"], "holds");
    assert!(checks.iter().all(|c| c["status"] != "violated"));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let out = starring(&["analyze", "Q8"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse error"), "stderr was: {err}");
}

#[test]
fn order_cap_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_starring"))
        .args(["analyze", "Z100"])
        .env("STARRING_MAX_ORDER", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceeds the configured maximum 50"), "stderr was: {err}");
}

#[test]
fn small_corpus_run_summarizes_and_exits_zero() {
    let out = starring(&[
        "corpus",
        "--zmod-max",
        "12",
        "--product-order-max",
        "16",
        "--factors",
        "2,3,4",
        "--matrix",
        "2",
        "--jobs",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rings checked:"));
    assert!(text.contains("TH-SPLIT-IDEAL"));
    assert!(!text.contains("VIOLATED"));
}
