use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ratiosel_cli::solve::SolveReport;
use ratiosel_core::decimal::from_decimal_strs;
use serde_json::Value;
use tempfile::TempDir;

const COUNTEREXAMPLE: &str = "a,b\n1,10\n3,3\n6,12\n4,6\n";
const SMALL_EXAMPLE: &str = "a,b\n3,6\n2,2\n5,2\n7,8\n";

fn ratiosel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratiosel"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, contents).unwrap();
    p
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn without_timing(mut v: Value) -> Value {
    if let Some(obj) = v.as_object_mut() {
        obj.remove("timing_ms");
    }
    v
}

#[test]
fn solve_greedy_and_brute_on_counterexample() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "b.csv", COUNTEREXAMPLE);
    let out = ratiosel(&["solve", "--input", s(&input), "--n", "3", "--mode", "greedy"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["indices"], serde_json::json!([1, 2, 3]));
    assert_eq!(
        (v["ratio"]["num"].as_str(), v["ratio"]["den"].as_str()),
        (Some("10"), Some("25"))
    );
    let trace: Vec<_> = v["trace"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["index"].as_u64().unwrap())
        .collect();
    assert_eq!(trace, [1, 2, 3]);

    let out = ratiosel(&["solve", "--input", s(&input), "--n", "3", "--mode", "brute"]);
    let v = json(&out);
    assert_eq!(v["indices"], serde_json::json!([1, 3, 4]));
    assert_eq!(
        (v["ratio"]["num"].as_str(), v["ratio"]["den"].as_str()),
        (Some("11"), Some("28"))
    );
    assert_eq!(v["enumerated"], 4);

    let out = ratiosel(&["solve", "--input", s(&input), "--n", "3", "--mode", "dinkelbach"]);
    let v = json(&out);
    assert_eq!(v["indices"], serde_json::json!([1, 3, 4]));
    assert_eq!(v["iterations"], 2);
}

#[test]
fn solve_reduced_on_small_example() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.csv", SMALL_EXAMPLE);
    let out = ratiosel(&["solve", "--input", s(&input), "--n", "2", "--mode", "reduced"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["indices"], serde_json::json!([1, 2]));
    assert_eq!(
        (v["ratio"]["num"].as_str(), v["ratio"]["den"].as_str()),
        (Some("5"), Some("8"))
    );
    assert_eq!(v["enumerated"], 5);
}

#[test]
fn float_greedy_matches_exact_picks() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "b.csv", COUNTEREXAMPLE);
    let out = ratiosel(&["solve", "--input", s(&input), "--n", "3", "--arithmetic", "float"]);
    let v = json(&out);
    assert_eq!(v["indices"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["ratio"]["value"], 0.4);
}

#[test]
fn decimal_input_reports_input_units() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "d.csv", "a,b\r\n0.1,1\r\n0.3,0.3\r\n0.6,1.2\r\n0.4,0.6\r\n");
    let v = json(&ratiosel(&[
        "solve",
        "--input",
        s(&input),
        "--n",
        "3",
        "--mode",
        "brute",
    ]));
    assert_eq!(v["indices"], serde_json::json!([1, 3, 4]));
    assert_eq!(
        (v["ratio"]["num"].as_str(), v["ratio"]["den"].as_str()),
        (Some("1.1"), Some("2.8"))
    );
}

#[test]
fn error_objects_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.csv", "a,b\n1,2\nx,3\n");
    let out = ratiosel(&["solve", "--input", s(&bad), "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "ParseError");
    assert_eq!(v["error"]["line"], 3);

    let short = write(&dir, "short.csv", "a,b\n1,1\n");
    let v = json(&ratiosel(&["solve", "--input", s(&short), "--n", "1"]));
    assert_eq!(v["error"]["kind"], "TooShort");

    let input = write(&dir, "b.csv", COUNTEREXAMPLE);
    let out = ratiosel(&["solve", "--input", s(&input), "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "InvalidSubsetSize");

    let out = ratiosel(&[
        "solve",
        "--input",
        s(&input),
        "--n",
        "3",
        "--mode",
        "brute",
        "--arithmetic",
        "float",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "ConfigError");

    let out = ratiosel(&[
        "solve",
        "--input",
        s(&input),
        "--n",
        "3",
        "--mode",
        "brute",
        "--cap",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "EnumerationCapExceeded");

    let missing = dir.path().join("missing.csv");
    let out = ratiosel(&["solve", "--input", s(&missing), "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "IoError");

    assert_eq!(ratiosel(&["solve", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        ratiosel(&["bench", "--sizes", "100,10", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "b.csv", COUNTEREXAMPLE);
    let report = dir.path().join("report.json");
    let out = ratiosel(&["solve", "--input", s(&input), "--n", "3", "--output", s(&report)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["indices"], serde_json::json!([1, 2, 3]));
}

#[test]
fn report_round_trips_to_exact_ratio() {
    let dir = TempDir::new().unwrap();
    let csv = "a,b\n0.25,3\n1.5,0.75\n12,7\n0.125,2\n9,9.5\n";
    let input = write(&dir, "r.csv", csv);
    for mode in ["greedy", "brute", "reduced", "dinkelbach"] {
        let out = ratiosel(&["solve", "--input", s(&input), "--n", "3", "--mode", mode]);
        let report: SolveReport = serde_json::from_slice(&out.stdout).unwrap();
        let rows: Vec<(&str, &str)> = csv.lines().skip(1).map(|l| l.split_once(',').unwrap()).collect();
        let all = from_decimal_strs(
            &rows.iter().map(|r| r.0).collect::<Vec<_>>(),
            &rows.iter().map(|r| r.1).collect::<Vec<_>>(),
        )
        .unwrap();
        let zero_based: Vec<usize> = report.indices.iter().map(|i| i - 1).collect();
        let exact = all.instance.ratio_of(&zero_based).unwrap();
        assert_eq!(all.unscale(&exact.num), report.ratio.num);
        assert_eq!(all.unscale(&exact.den), report.ratio.den, "{mode}");
    }
}

#[test]
fn identical_runs_give_identical_json() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "b.csv", COUNTEREXAMPLE);
    for mode in ["greedy", "brute", "reduced", "dinkelbach"] {
        let args = ["solve", "--input", s(&input), "--n", "2", "--mode", mode];
        assert_eq!(
            without_timing(json(&ratiosel(&args))),
            without_timing(json(&ratiosel(&args)))
        );
    }
    let args = ["verify", "--trials", "20", "--max-N", "8", "--seed", "9"];
    let (x, y) = (ratiosel(&args), ratiosel(&args));
    assert_eq!(x.status.code(), Some(0));
    assert_eq!(x.stdout, y.stdout);
}

#[test]
fn verify_sweeps() {
    let out = ratiosel(&["verify", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["properties"].as_object().unwrap().is_empty());

    let out = ratiosel(&["verify", "--trials", "100", "--max-N", "10", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for (name, tally) in v["properties"].as_object().unwrap() {
        assert_eq!(tally["failed"], 0, "{name}");
        assert!(tally["checked"].as_u64().unwrap() > 0, "{name}");
    }

    let out = ratiosel(&["verify", "--trials", "30", "--max-N", "12", "--cap", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["skipped_by_cap"].as_u64().unwrap() > 0);
}

#[test]
fn bench_reports_rows() {
    let out = ratiosel(&["bench", "--sizes", "100", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("median_ms"));

    let out = ratiosel(&["bench", "--sizes", "30", "--n", "5", "--brute", "--repeats", "1"]);
    let v = json(&out);
    let brute = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["solver"] == "brute")
        .unwrap();
    assert_eq!(brute["enumerated"], 142_506);
}

#[test]
fn gappy_example() {
    let dir = TempDir::new().unwrap();
    let u = write(
        &dir,
        "u.txt",
        &format!("{}\n{}\n{}\n", 2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0),
    );
    let uhat = write(
        &dir,
        "uhat.txt",
        &format!("{}\n{}\n{}\n", 1.0 / 3.0, -2.0 / 3.0, 2.0 / 3.0),
    );
    let out = ratiosel(&["gappy", "--u", s(&u), "--uhat", s(&uhat), "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["selection"], serde_json::json!([1, 2]));
    let rhs_sq = v["rhs_squared"].as_f64().unwrap();
    assert!((rhs_sq - 0.625).abs() <= 1e-12 * 0.625);
    assert!((v["lhs"].as_f64().unwrap() - 0.25).abs() <= 1e-12);
    assert_eq!(v["bound_holds"], true);

    let out = ratiosel(&["gappy", "--u", s(&u), "--uhat", s(&uhat), "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "InvalidSubsetSize");

    let zero_u = write(&dir, "u0.txt", "0.6\n0.8\n0\n");
    let zero_uhat = write(&dir, "uhat0.txt", "0.8\n-0.6\n0\n");
    let out = ratiosel(&["gappy", "--u", s(&zero_u), "--uhat", s(&zero_uhat), "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "ZeroRow");
}
