//! End-to-end tests of the experiment runner binary: wire formats,
//! determinism of payloads under a fixed seed, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn idealab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("idealab-cli-tests");
    std::fs::create_dir_all(&dir).expect("tmp dir");
    dir.join(name)
}

#[test]
fn gillis_reproduces_the_reference_numbers() {
    let report = json_of(&idealab(&["lab", "gillis", "--d", "3", "--delta", "1/100"]));
    assert_eq!(report["results"]["m0"], 11);
    assert_eq!(report["results"]["k"], 22);
    assert_eq!(report["results"]["coefficients"], serde_json::json!(["1", "6"]));
}

#[test]
fn poset_duality_passes_on_ed_fin() {
    let report = json_of(&idealab(&[
        "poset", "duality", "--coloring", "ed_fin", "--window", "14",
    ]));
    assert_eq!(report["results"]["pass"], true);
    assert_eq!(report["results"]["longest_chain"], 4);
}

#[test]
fn represent_certifies_measure_files() {
    let path = tmp("measures.json");
    std::fs::write(&path, r#"[{"0": "1", "1": "1/2"}, {"2": "3/4", "4": "2"}]"#).unwrap();
    let report = json_of(&idealab(&[
        "banach", "represent", "--measures", path.to_str().unwrap(), "--window", "6",
    ]));
    assert_eq!(report["results"]["certified_all_subsets"], true);
}

#[test]
fn payloads_are_deterministic_for_a_fixed_seed() {
    let args =
        ["color", "extract", "--window", "64", "--seed", "11", "--name", "random"];
    let a = json_of(&idealab(&args));
    let b = json_of(&idealab(&args));
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["params"], b["params"]);

    let equi = [
        "lab", "equi", "--n-list", "8", "--p", "2", "--trials", "400", "--seed", "5",
    ];
    let a = json_of(&idealab(&equi));
    let b = json_of(&idealab(&equi));
    assert_eq!(a["results"], b["results"]);
}

#[test]
fn different_seeds_change_random_extractions() {
    let a = json_of(&idealab(&["color", "extract", "--window", "64", "--seed", "1"]));
    let b = json_of(&idealab(&["color", "extract", "--window", "64", "--seed", "2"]));
    assert_ne!(a["results"], b["results"]);
}

#[test]
fn validation_errors_exit_one() {
    let out = idealab(&["color", "eval", "--name", "nonsense", "--set", "{0,1}"]);
    assert_eq!(out.status.code(), Some(1));

    let out = idealab(&["measures", "eval", "--measures", "/nonexistent.json", "--set", "{0}"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn budget_exhaustion_exits_two() {
    // a one-millisecond budget cannot exhaust 3^19 colorings of [6]^3
    let out = idealab(&[
        "lab",
        "cover-search",
        "--n",
        "6",
        "--p",
        "2",
        "--r",
        "3",
        "--budget-ms",
        "1",
        "--prune",
        "false",
    ]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn clap_usage_errors_exit_one() {
    let out = idealab(&["lab", "cover-search", "--n", "8"]);
    assert_eq!(out.status.code(), Some(1));
    let out = idealab(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn csv_format_renders_profiles() {
    let path = tmp("measures-csv.json");
    std::fs::write(&path, r#"[{"0": "1", "1": "1/2"}]"#).unwrap();
    let out = idealab(&[
        "measures",
        "profile",
        "--measures",
        path.to_str().unwrap(),
        "--set",
        "{0,1}",
        "--kind",
        "exh",
        "--window",
        "4",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("key,value"));
    assert!(text.contains("tail[0],3/2"));
}

#[test]
fn report_files_are_written() {
    let path = tmp("gillis-report.json");
    let out = idealab(&[
        "lab",
        "gillis",
        "--d",
        "2",
        "--alpha",
        "1/2",
        "--beta",
        "1/2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["results"]["m0"], 2);
    assert_eq!(report["id"], "lab.gillis");
}

#[test]
fn fronts_expression_language_round_trips() {
    let report = json_of(&idealab(&["fronts", "rank", "--expr", "oplus(schreier,cube(2))"]));
    assert_eq!(report["results"]["rank"], "w + 2");

    let report = json_of(&idealab(&[
        "fronts",
        "enumerate",
        "--expr",
        "otimes(cube(2),cube(2))",
        "--window",
        "8",
    ]));
    assert_eq!(report["results"]["rank"], "4");
    assert!(report["results"]["members"].as_array().unwrap().len() > 10);

    let fam = tmp("family.txt");
    std::fs::write(&fam, "{0,1}\n{2}\n").unwrap();
    let report = json_of(&idealab(&[
        "fronts",
        "rank",
        "--expr",
        &format!("envelope({})", fam.display()),
        "--window",
        "8",
    ]));
    assert_eq!(report["results"]["rank"], "2");
}

#[test]
fn workers_do_not_change_the_cover_search_verdict() {
    let one = json_of(&idealab(&["lab", "cover-search", "--n", "6", "--p", "2", "--r", "1"]));
    let four = json_of(&idealab(&[
        "lab", "cover-search", "--n", "6", "--p", "2", "--r", "1", "--workers", "4",
    ]));
    assert_eq!(one["results"]["verdict"], four["results"]["verdict"]);
}
