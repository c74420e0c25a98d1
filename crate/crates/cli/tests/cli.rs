use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_annihilator"))
        .args(args)
        .env_remove("ANNIHILATOR_SOLVER_LIMIT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON document")
}

fn code(output: &Output) -> i32 {
    output.status.code().unwrap()
}

#[test]
fn compute_edge_list() {
    let out = run(&["compute", "--format", "edgelist"], "n 4\n0 1\n1 2\n2 0\n");
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "compute");
    let report = &doc["results"][0]["report"];
    assert_eq!(
        (report["alpha"].as_u64(), report["annihilation"].as_u64()),
        (Some(2), Some(2))
    );
    assert_eq!(report["alpha_crit"], 1);
    assert!(report.get("witnesses").is_none());
}

#[test]
fn compute_single_vertex_with_witnesses() {
    let out = run(&["compute", "--witnesses"], "@\n");
    let report = &json(&out)["results"][0]["report"];
    assert_eq!(
        (report["alpha"].as_u64(), report["alpha_crit"].as_u64()),
        (Some(1), Some(1))
    );
    assert_eq!(report["mu"], 0);
    assert_eq!(report["witnesses"]["alpha"], serde_json::json!([0]));
}

#[test]
fn compute_several_graph6_lines_with_oracle() {
    let out = run(&["compute", "--oracle"], "Cw\n\nC~\n");
    let results = json(&out)["results"].as_array().unwrap().clone();
    assert_eq!(results.len(), 2);
    assert_eq!(results[1]["report"]["alpha_crit"], 0);
}

#[test]
fn compute_limit_flag_and_env() {
    let out = run(&["compute", "--limit-n", "3"], "Cw\n");
    let doc = json(&out);
    assert_eq!(code(&out), 0);
    assert!(doc["results"][0]["report"]["alpha"].is_null());
    assert_eq!(doc["diagnostics"].as_array().unwrap().len(), 1);

    let child = Command::new(env!("CARGO_BIN_EXE_annihilator"))
        .args(["compute", "--quiet", "--table"])
        .env("ANNIHILATOR_SOLVER_LIMIT", "3")
        .arg("/dev/null")
        .output()
        .unwrap();
    assert_eq!(child.status.code(), Some(0));
}

#[test]
fn parse_errors_exit_3() {
    let out = run(&["compute"], "C~\nC~~\n");
    assert_eq!(code(&out), 3);
    let doc = json(&out);
    assert!(doc["diagnostics"][0]
        .as_str()
        .unwrap()
        .starts_with("line 2"));

    let out = run(&["compute", "--format", "edgelist"], "n 3\n0 7\n");
    assert_eq!(code(&out), 3);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["compute", "--format", "sparse6"], "")), 2);
    assert_eq!(code(&run(&["family", "c3-singletons", "t=0"], "")), 2);
    assert_eq!(code(&run(&["family", "petersen"], "")), 2);
    assert_eq!(code(&run(&["verify", "THM9", "--enumerate", "3"], "")), 2);
    assert_eq!(
        code(&run(&["verify", "LEMMA_IF", "--enumerate", "8"], "")),
        2
    );
    assert_eq!(code(&run(&["verify", "LEMMA_IF"], "")), 2);
    assert_eq!(code(&run(&["search", "--random", "5,1.5,3"], "")), 2);
}

#[test]
fn family_verify() {
    let out = run(&["family", "chorded-cycle-star", "k=3", "--verify"], "");
    assert_eq!(code(&out), 0);
    let results = &json(&out)["results"];
    assert_eq!(results["verification"]["verdict"], "PASS");
    assert_eq!(results["verification"]["report"]["alpha"], 5);
    assert_eq!(results["verification"]["report"]["alpha_crit"], 2);
    assert_eq!(results["n"], 10);

    let out = run(&["family", "c3-singletons", "1", "--verify", "--quiet"], "");
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "PASS c3-singletons t=1 alpha=2 a=2 alpha'=1"
    );
}

#[test]
fn family_verify_mismatch_exits_1() {
    // alpha is out of reach, so its prediction cannot be confirmed
    let out = run(
        &[
            "family",
            "chorded-cycle-star",
            "k=40",
            "--verify",
            "--limit-n",
            "20",
        ],
        "",
    );
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["results"]["verification"]["verdict"], "FAIL");
}

#[test]
fn family_graph_round_trips_through_compute() {
    let out = run(&["family", "c5-chords-singleton"], "");
    let graph6 = json(&out)["results"]["graph6"]
        .as_str()
        .unwrap()
        .to_string();
    let out = run(&["compute"], &graph6);
    let report = &json(&out)["results"][0]["report"];
    assert_eq!(
        (report["alpha"].as_u64(), report["alpha_crit"].as_u64()),
        (Some(3), Some(1))
    );
}

#[test]
fn verify_only_if_finds_triangle_plus_vertex() {
    let out = run(&["verify", "THM1_ONLY_IF", "--enumerate", "4"], "");
    assert_eq!(code(&out), 0);
    let results = &json(&out)["results"];
    assert_eq!(results["graphs_examined"], 75);
    assert_eq!(results["tallies"]["THM1_ONLY_IF"]["violated"], 4);
    let graphs: Vec<&str> = results["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["graph6"].as_str().unwrap())
        .collect();
    assert_eq!(graphs, ["CJ", "CT", "Ce", "Cw"]);
}

#[test]
fn verify_proven_statements_pass() {
    let out = run(
        &[
            "verify",
            "LEMMA_IF,THM4_BIPARTITE",
            "THM6_CLAWFREE",
            "--enumerate",
            "5",
            "--jobs",
            "2",
        ],
        "",
    );
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["unexpected_violations"], 0);
}

#[test]
fn verify_family_range() {
    let out = run(
        &[
            "verify",
            "COR3_FORWARD",
            "--family",
            "chorded-cycle-star",
            "2..6",
        ],
        "",
    );
    let results = &json(&out)["results"];
    assert_eq!(results["tallies"]["COR3_FORWARD"]["violated"], 5);
    assert_eq!(code(&out), 0);
}

#[test]
fn search_graph6_stream_and_early_exit() {
    let out = run(
        &[
            "search",
            "--graph6",
            "-",
            "--early-exit",
            "--theorem",
            "THM1_ONLY_IF",
        ],
        "C~\nCw\nC~\n",
    );
    let results = &json(&out)["results"];
    assert_eq!(results["graphs_examined"], 2);
    assert_eq!(results["stopped_early"], true);

    let out = run(&["search", "--graph6", "-"], "C~\n!!\n");
    assert_eq!(code(&out), 3);
}

#[test]
fn search_random_is_reproducible() {
    let args = ["search", "--random", "9,0.4,50", "--seed", "5", "--table"];
    let strip = |o: Output| String::from_utf8(o.stdout).unwrap();
    let first = strip(run(&args, ""));
    assert_eq!(first, strip(run(&args, "")));
    assert!(first.contains("graphs examined: 50"));
}

#[test]
fn quiet_prints_one_line() {
    let out = run(&["verify", "LEMMA_IF", "--enumerate", "3", "--quiet"], "");
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("PASS"));
}
