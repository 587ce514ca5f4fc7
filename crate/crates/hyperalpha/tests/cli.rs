//! Black-box tests of the command-line binary: exit codes, the JSON
//! envelope, and artifact round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

use hyperalpha::UniformHypergraph;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperalpha"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("hyperalpha-cli-{}-{name}", std::process::id()));
    p
}

#[test]
fn generate_output_parses_back() {
    let out = run(&["generate", "broom", "5", "3", "3"]);
    assert!(out.status.success());
    let g = UniformHypergraph::parse(&stdout(&out)).unwrap();
    assert_eq!((g.k(), g.m()), (3, 5));
    assert_eq!(g.diameter().unwrap(), 3);
}

#[test]
fn spectral_json_envelope() {
    let star = tmp("star.uhg");
    assert!(bin()
        .args(["generate", "star", "4", "3", "--out"])
        .arg(&star)
        .output()
        .unwrap()
        .status
        .success());
    let out = bin()
        .args(["spectral", "--alpha", "0,0.5", "--format", "json"])
        .arg(&star)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["command", "inputs", "alpha", "results", "version"] {
        assert!(v.get(key).is_some(), "missing envelope key {key}");
    }
    assert_eq!(v["command"], "spectral");
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    let rho0 = results[0]["rho"].as_f64().unwrap();
    assert!((rho0 - 4f64.powf(1.0 / 3.0)).abs() < 1e-9);
    let perron = results[0]["components"][0]["perron"].as_array().unwrap();
    assert_eq!(perron.len(), 9);
}

#[test]
fn disconnected_input_reports_components() {
    let path = tmp("two.uhg");
    std::fs::write(&path, "3 6 2\n0 1 2\n3 4 5\n").unwrap();
    let out = bin().args(["spectral", "--format", "json"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let comps = v["results"][0]["components"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    assert!((v["results"][0]["rho"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn malformed_file_exits_2() {
    let path = tmp("bad.uhg");
    std::fs::write(&path, "3 5\n").unwrap();
    let out = bin().args(["spectral"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let missing = tmp("missing.uhg");
    let out = bin().args(["spectral"]).arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_convergence_exits_3() {
    let star = tmp("star3.uhg");
    std::fs::write(&star, "3 7 3\n0 1 2\n0 3 4\n0 5 6\n").unwrap();
    let out = bin()
        .args(["spectral", "--max-iter", "1"])
        .arg(&star)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bad_alpha_and_disconnected_bounds_exit_4() {
    let star = tmp("star4.uhg");
    std::fs::write(&star, "3 7 3\n0 1 2\n0 3 4\n0 5 6\n").unwrap();
    let out = bin().args(["spectral", "--alpha", "1.5"]).arg(&star).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    let two = tmp("two4.uhg");
    std::fs::write(&two, "3 6 2\n0 1 2\n3 4 5\n").unwrap();
    let out = bin().args(["bounds"]).arg(&two).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn transform_move_reports_strict_increase() {
    let path = tmp("p33.uhg");
    std::fs::write(&path, "3 7 3\n0 1 2\n2 3 4\n4 5 6\n").unwrap();
    let out = bin()
        .args(["transform"])
        .arg(&path)
        .args(["move", "--u", "2", "--edge", "2", "--from", "4",
               "--alpha", "0,0.5", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for rec in v["results"].as_array().unwrap() {
        assert_eq!(rec["outcome"]["strict_increase"], true);
        let uhg = rec["outcome"]["result_uhg"].as_str().unwrap();
        UniformHypergraph::parse(uhg).unwrap();
    }
}

#[test]
fn verify_commands_exit_0() {
    let out = run(&["verify", "hypertrees", "--m", "3", "--k", "3",
                    "--alpha", "0,0.25,0.5,0.75", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"][0]["matched"], true);
    assert_eq!(v["results"][0]["unique"], true);
    let out = run(&["verify", "broom-chain", "--m", "5", "--k", "3", "--alpha", "0,0.5"]);
    assert!(out.status.success());
}

#[test]
fn enumerate_lists_classes() {
    let out = run(&["enumerate", "--m", "3", "--k", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    let out = run(&["enumerate", "--m", "3", "--k", "3", "--r", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 3);
}

#[test]
fn human_and_json_share_values() {
    let star = tmp("starhj.uhg");
    std::fs::write(&star, "3 9 4\n0 1 2\n0 3 4\n0 5 6\n0 7 8\n").unwrap();
    let json_out = bin()
        .args(["spectral", "--alpha", "0.5", "--format", "json"])
        .arg(&star)
        .output()
        .unwrap();
    let human_out = bin()
        .args(["spectral", "--alpha", "0.5", "--format", "human"])
        .arg(&star)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let rho = v["results"][0]["rho"].as_f64().unwrap();
    assert!(stdout(&human_out).contains(&format!("rho: {rho}")));
}
