//! End-to-end tests of the command-line interface: file formats, exit
//! codes, JSON wire shapes, seed determinism, and violation replay.

use std::io::Write;
use std::process::{Command, Output};

fn entrocount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entrocount"))
        .args(args)
        .env_remove("ENTROCOUNT_SEED")
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("entrocount_cli_{name}_{}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn bound_reports_permanent_bregman_and_ceilings() {
    let matrix = write_temp("star4", "1111\n0100\n0010\n0001\n");
    let out = entrocount(&[
        "bound",
        matrix.to_str().unwrap(),
        "--alpha",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["permanent"], "1");
    assert_eq!(v["row_sums"], serde_json::json!([4, 1, 1, 1]));
    let bregman = v["bregman"].as_f64().unwrap();
    assert!((bregman - 24.0f64.powf(0.25)).abs() < 1e-9);
    let report = &v["reports"][0];
    assert_eq!(report["alpha"], 2.0);
    assert!((report["ceiling"].as_f64().unwrap() - 1.92).abs() < 1e-9);
    assert_eq!(report["integer_ceiling"], 1);
    assert_eq!(report["vacuous"], false);
}

#[test]
fn bound_accepts_bipartite_edge_lists() {
    let graph = write_temp("k33", "3\n1 1\n1 2\n1 3\n2 1\n2 2\n2 3\n3 1\n3 2\n3 3\n");
    let out = entrocount(&[
        "bound",
        graph.to_str().unwrap(),
        "--graph",
        "--alpha",
        "1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["permanent"], "6");
    // Bregman is tight on the all-ones matrix.
    assert!((v["bregman"].as_f64().unwrap() - 6.0).abs() < 1e-9);
}

#[test]
fn bound_optimizer_emits_best_point_and_trace() {
    let matrix = write_temp("opt", "1111\n0100\n0010\n0001\n");
    let out = entrocount(&[
        "bound",
        matrix.to_str().unwrap(),
        "--optimize",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let opt = &v["optimization"];
    assert!(opt["best_ceiling"].is_f64());
    assert!(opt["trace"].as_array().unwrap().len() >= 65);
    let best = opt["best_ceiling"].as_f64().unwrap();
    // No probed order may beat the reported optimum.
    for entry in opt["trace"].as_array().unwrap() {
        if let Some(c) = entry[1].as_f64() {
            assert!(best <= c + 1e-12);
        }
    }
}

#[test]
fn entropy_of_distribution_and_table() {
    let dist = write_temp("dist", "[0.25, 0.25, 0.25, 0.25]");
    let out = entrocount(&[
        "entropy",
        dist.to_str().unwrap(),
        "--alpha",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v[0]["entropy"].as_f64().unwrap() - 0.75).abs() < 1e-12);

    let table = write_temp("table", r#"{"shape":[2,2],"probs":[0.25,0.25,0.25,0.25]}"#);
    let out = entrocount(&[
        "entropy",
        table.to_str().unwrap(),
        "--alpha",
        "2",
        "--target",
        "1",
        "--given",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v[0]["conditional_daroczy"].as_f64().unwrap() - 0.25).abs() < 1e-12);
    assert!((v[0]["conditional_weighted"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn entropy_renormalize_flag_rescues_unnormalized_input() {
    let dist = write_temp("unnorm", "[1, 1, 2]");
    let strict = entrocount(&["entropy", dist.to_str().unwrap()]);
    assert_eq!(strict.status.code(), Some(2));
    let relaxed = entrocount(&["entropy", dist.to_str().unwrap(), "--renormalize"]);
    assert!(relaxed.status.success());
}

#[test]
fn family_checks_and_error_paths() {
    let triangle = write_temp("triangle", r#"{"n":3,"sets":[[1,2],[1,3],[2,3]]}"#);
    let out = entrocount(&[
        "family",
        triangle.to_str().unwrap(),
        "--alpha",
        "1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let check = &v["checks"][0];
    assert!((check["cardinality"]["lhs"].as_f64().unwrap() - 3.0f64.ln()).abs() < 1e-9);
    assert_eq!(check["intersection"]["holds"], true);
    assert_eq!(check["intersection"]["precondition_met"], true);

    // Inline JSON works in place of a file path.
    let out = entrocount(&[
        "family",
        r#"{"n":3,"sets":[[1,2],[1,3],[2,3]]}"#,
        "--alpha",
        "1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());

    // Intersection check on a non-uniform family is a usage error.
    let bad = write_temp("nonuniform", r#"{"n":3,"sets":[[1],[2,3]]}"#);
    let out = entrocount(&["family", bad.to_str().unwrap(), "--checks", "intersection"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shearer_check_over_table_and_cover_files() {
    let table = write_temp(
        "sh_table",
        r#"{"shape":[2,2],"probs":[0.25,0.25,0.25,0.25]}"#,
    );
    let cover = write_temp("sh_cover", r#"{"n":2,"groups":[[1],[2],[1,2]]}"#);
    let out = entrocount(&[
        "shearer",
        "--table",
        table.to_str().unwrap(),
        "--cover",
        cover.to_str().unwrap(),
        "--alpha",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row = &v["checks"][0];
    assert_eq!(row["k"], 2);
    assert!((row["shearer"]["lhs"].as_f64().unwrap() - 1.5).abs() < 1e-12);
    assert!((row["shearer"]["rhs"].as_f64().unwrap() - 1.75).abs() < 1e-12);
    assert_eq!(row["shearer"]["holds"], true);
    assert!(row["shearer"]["slack"].is_f64());
}

#[test]
fn verify_runs_green_and_is_byte_deterministic() {
    let args = [
        "verify",
        "permanent",
        "--seed",
        "11",
        "--instances",
        "40",
        "--format",
        "json",
    ];
    let first = entrocount(&args);
    assert!(first.status.success());
    let second = entrocount(&args);
    assert_eq!(stdout(&first), stdout(&second));
    let v: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v[0]["suite"], "permanent");
    assert_eq!(v[0]["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_env_seed_overrides_flag() {
    let with_flag = entrocount(&[
        "verify",
        "entropy",
        "--seed",
        "3",
        "--instances",
        "5",
        "--format",
        "json",
    ]);
    let with_env = Command::new(env!("CARGO_BIN_EXE_entrocount"))
        .args([
            "verify",
            "entropy",
            "--seed",
            "4",
            "--instances",
            "5",
            "--format",
            "json",
        ])
        .env("ENTROCOUNT_SEED", "3")
        .output()
        .expect("binary runs");
    assert_eq!(stdout(&with_flag), stdout(&with_env));
}

#[test]
fn verify_rejects_zero_instances() {
    let out = entrocount(&["verify", "entropy", "--instances", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_matrix_density_is_configurable() {
    let out = entrocount(&[
        "verify",
        "permanent",
        "--bernoulli-p",
        "0.9",
        "--instances",
        "20",
    ]);
    assert!(out.status.success());
    let out = entrocount(&["verify", "permanent", "--bernoulli-p", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn replay_reproduces_a_dump_and_flags_tampering() {
    // Build a dump whose stored sides come from the library itself, then
    // check the CLI reproduces them bit for bit.
    let matrix_text = "110\n011\n111\n";
    let m = entrocount::BinaryMatrix::from_text(matrix_text).unwrap();
    let per = entrocount::permanent_ryser(&m).unwrap() as f64;
    let ceiling =
        entrocount::alpha_bound(&m, entrocount::AlphaParameter::new(2.0).unwrap()).ceiling;
    assert_eq!(per, 3.0);

    let dump = serde_json::json!({
        "check": "bound_validity",
        "alpha": 2.0,
        "lhs": per,
        "rhs": ceiling,
        "instance": { "matrix": matrix_text },
    });
    let path = write_temp("dump", &dump.to_string());
    let out = entrocount(&[
        "verify",
        "permanent",
        "--replay",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["replayed_lhs"].as_f64().unwrap(), per);
    assert_eq!(v[0]["replayed_rhs"].as_f64().unwrap(), ceiling);
    assert_eq!(v[0]["reproduced"], serde_json::json!(true));
    assert!(out.status.success());

    let tampered = serde_json::json!({
        "check": "bound_validity",
        "alpha": 2.0,
        "lhs": 999.0,
        "rhs": ceiling,
        "instance": { "matrix": matrix_text },
    });
    let path = write_temp("tampered", &tampered.to_string());
    let out = entrocount(&["verify", "permanent", "--replay", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // Whole suite reports are accepted too, with violations extracted.
    let suite_report = serde_json::json!([{
        "suite": "permanent",
        "seed": 1,
        "instances": 1,
        "checks_run": 1,
        "violations": [dump],
        "worst_slack": 0.0,
        "worst_equality_gap": 0.0,
        "excluded_zero_rows": 0,
    }]);
    let path = write_temp("suite_dump", &suite_report.to_string());
    let out = entrocount(&[
        "verify",
        "permanent",
        "--replay",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["reproduced"], serde_json::json!(true));

    // A report with no violations is a usage error, not a silent pass.
    let empty = serde_json::json!([{ "suite": "permanent", "violations": [] }]);
    let path = write_temp("empty_dump", &empty.to_string());
    let out = entrocount(&["verify", "permanent", "--replay", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_inputs_exit_with_usage_code() {
    let ragged = write_temp("ragged", "10\n1\n");
    assert_eq!(
        entrocount(&["bound", ragged.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let nonsquare = write_temp("nonsquare", "101\n010\n");
    assert_eq!(
        entrocount(&["bound", nonsquare.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        entrocount(&["bound", "/definitely/not/there"])
            .status
            .code(),
        Some(2)
    );
    let bad_edges = write_temp("bad_edges", "3\n1 4\n");
    assert_eq!(
        entrocount(&["bound", bad_edges.to_str().unwrap(), "--graph"])
            .status
            .code(),
        Some(2)
    );
}
