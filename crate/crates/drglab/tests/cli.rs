use drglab::cli;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("drglab").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn family_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q4sq.edges");
    let p = path.to_str().unwrap();
    let (code, _, err) = run(&["family", "--name", "qn2", "--n", "4", "--out", p]);
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("graph Q4^2 16 80\n"));

    let v = json(&["analyze", "--in", p, "--json"]);
    assert_eq!(v["intersection_array"], "{10,3;1,6}");
    assert_eq!(v["srg_params"], "(16,10,6,6)");
    assert_eq!(v["antipodal"], false);
}

#[test]
fn family_to_stdout() {
    let (code, out, _) = run(&["family", "--name", "cycle", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "graph C4 4 4\n0 1\n0 3\n1 2\n2 3\n");
}

#[test]
fn json_output_is_stable() {
    let a = run(&["analyze", "--name", "johnson", "--n", "7", "--k", "3", "--json"]);
    let b = run(&["analyze", "--name", "johnson", "--n", "7", "--k", "3", "--json"]);
    assert_eq!(a, b);
}

#[test]
fn square_of_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c7.edges");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["family", "--name", "cycle", "--n", "7", "--out", p]).0, 0);
    let v = json(&["analyze", "--name", "square-of", "--in", p, "--json"]);
    assert_eq!(v["intersection_array"], Value::Null);
    assert_eq!(v["dr_failure_witness"]["values"], serde_json::json!([1, 2]));
}

#[test]
fn spectrum_both_methods_agree() {
    let v = json(&["spectrum", "--name", "qn2", "--n", "5", "--json"]);
    assert_eq!(v["exact"], true);
    assert_eq!(v["agree"], true);
    assert_eq!(v["entries"], serde_json::json!([[15, 1], [5, 6], [-1, 15], [-3, 10]]));
    assert_eq!(v["line_graph"]["verdict"], "excluded by eigenvalue");
}

#[test]
fn aut_reports_order_as_string() {
    let v = json(&["aut", "--name", "qn2", "--n", "4", "--json"]);
    assert_eq!(v["order"], "1920");
    assert_eq!(v["distance_transitive"], true);
    assert_eq!(v["primitive"], true);
}

#[test]
fn connectivity_and_panconnect() {
    let v = json(&["connectivity", "--name", "qn2", "--n", "4", "--json"]);
    assert_eq!(v["kappa"], 10);
    assert_eq!(v["watkins_verified"], true);
    let v = json(&["panconnect", "--name", "qn2", "--n", "3", "--json"]);
    assert_eq!(v["panconnected"], true);
    let (code, out, _) = run(&["panconnect", "--name", "cycle", "--n", "6", "--json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["witness"], serde_json::json!({"u": 0, "v": 1, "length": 2}));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["analyze", "--name", "qn2"]).0, 2);
    assert_eq!(run(&["analyze"]).0, 2);
    assert_eq!(run(&["analyze", "--in", "/nonexistent/graph.edges"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["verify", "--max-n", "12"]).0, 2);
    assert_eq!(run(&["spectrum", "--name", "cycle", "--n", "5", "--method", "exact"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.edges");
    std::fs::write(&path, "graph g 3 1\n1 0\n").unwrap();
    let (code, _, err) = run(&["analyze", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn verify_lists_each_claim_once() {
    let (code, out, _) = run(&["verify", "--max-n", "4", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let entries = v.as_array().unwrap();
    let mut ids: Vec<&str> = entries.iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert_eq!(ids.len(), drglab::verify::claim_ids().len());
    ids.dedup();
    assert_eq!(ids.len(), entries.len());
    let failing: Vec<&str> = entries
        .iter()
        .filter(|e| e["status"] == "FAIL")
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["johnson_square_8_4"]);
    assert_eq!(code, 1);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
