use std::path::{Path, PathBuf};
use std::process::Command;

use genus_calc::cli::{execute, Command as Cmd, Format, RunConfig, EXIT_HYPOTHESIS, EXIT_INVALID, EXIT_IO, EXIT_OK};
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name)
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares with a golden file; `GENUS_CALC_BLESS=1` rewrites it instead.
fn check_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("GENUS_CALC_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected, "golden file {name} differs");
}

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_genus-calc")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run(command: Cmd) -> (i32, String) {
    let o = execute(&RunConfig::new(command)).unwrap();
    (o.code, o.output)
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("genus-calc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn transfer_worked_golden() {
    let (code, out) = run(Cmd::Transfer {
        input: data("worked.json"),
        trace: false,
        verbose: false,
    });
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lambda_L_degree"], 3);
    assert_eq!(v["hypotheses"]["mu_zero"], true);
    check_golden("transfer_worked.json", &out);
}

#[test]
fn transfer_trace_and_verbose() {
    let (code, out) = run(Cmd::Transfer {
        input: data("tower.json"),
        trace: true,
        verbose: true,
    });
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let trace = v["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 2);
    assert_eq!(trace[1]["lambda_degree"], v["kida_A1"]);
    assert!(trace[0]["places"][0]["count"].is_u64());
    assert!(v["T3_bare"].is_object());
    assert_eq!(v["places"].as_array().unwrap().len(), 2);
}

#[test]
fn cohomology_golden() {
    let (code, out) = run(Cmd::Cohomology {
        input: data("wild.json"),
        delta: None,
    });
    assert_eq!(code, EXIT_OK);
    check_golden("cohomology_wild.json", &out);
    let (code, out) = run(Cmd::Cohomology {
        input: data("worked.json"),
        delta: Some(0),
    });
    assert_eq!(code, EXIT_INVALID);
    assert!(out.contains("DELTA_NORM"));
}

#[test]
fn cohomology_outside_prime_regime() {
    let (code, _, err) = bin(&["cohomology", data("tower.json").to_str().unwrap()]);
    assert_eq!(code, EXIT_HYPOTHESIS);
    assert!(err.contains("m = 2"));
}

#[test]
fn translate_runs() {
    let (code, out) = run(Cmd::Translate {
        input: data("wild.json"),
        s: vec!["q".into()],
        t: vec![],
    });
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["lambda_S_T"]["case_i"]["coeffs"].is_object());
    let (code, _, _) = bin(&["translate", data("wild.json").to_str().unwrap(), "--s", "l"]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn validate_reports_rules() {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(data("worked.json")).unwrap()).unwrap();
    v["delta_group"]["omega"] = serde_json::json!([0]);
    let p = temp_file("parity.json", &v.to_string());
    let (code, out, _) = bin(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    check_golden("validate_parity.json", &out);
    let (code, out, _) = bin(&["validate", p.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(out.starts_with("descriptor-id,valid,rule,message\n"));
    assert!(out.contains("OMEGA_PARITY"));
    let (code, out, _) = bin(&["validate", data("worked.json").to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"valid\": true"));
}

#[test]
fn schema_and_io_errors() {
    let p = temp_file("garbage.json", "{\"schema\": \"genus-calc/1\"");
    assert_eq!(bin(&["transfer", p.to_str().unwrap()]).0, EXIT_IO);
    let p = temp_file("old.json", &std::fs::read_to_string(data("worked.json")).unwrap().replace("genus-calc/1", "genus-calc/0"));
    assert_eq!(bin(&["transfer", p.to_str().unwrap()]).0, EXIT_IO);
    assert_eq!(bin(&["transfer", "/nonexistent/descriptor.json"]).0, EXIT_IO);
    assert_eq!(bin(&["transfer"]).0, EXIT_IO);
    assert_eq!(bin(&["frobnicate"]).0, EXIT_IO);
    assert_eq!(bin(&["--help"]).0, EXIT_OK);
}

#[test]
fn oracle_spec_example() {
    let (code, out, _) = bin(&["oracle", "--ell", "3", "--max-rank", "12", "--cases", "50"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["recovered"], 50);
    assert_eq!(v["cases"], 50);
    let (_, again, _) = bin(&["oracle", "--ell", "3", "--max-rank", "12", "--cases", "50"]);
    assert_eq!(out, again);
    let (_, other, _) = bin(&["oracle", "--ell", "3", "--max-rank", "12", "--cases", "50", "--seed", "1"]);
    assert_ne!(out, other);
    assert_eq!(bin(&["oracle", "--ell", "4"]).0, EXIT_INVALID);
}

#[test]
fn oracle_single_lattice() {
    let (code, out) = run(Cmd::Oracle {
        ell: 3,
        max_rank: 12,
        cases: 0,
        lattice: Some(data("lattice.json")),
    });
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["decomposition"], serde_json::json!({"alpha": 1, "beta": 0, "gamma": 1}));
    assert_eq!(v["cohomology"]["herbrand_q"], 1);
}

#[test]
fn verify_reports_each_suite() {
    let mut config = RunConfig::new(Cmd::Verify {
        cases: 5,
        suite: vec![],
    });
    config.format = Some(Format::Csv);
    let o = execute(&config).unwrap();
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<&str> = o.output.lines().collect();
    assert_eq!(lines.len(), 1 + genus_calc::verify::suite_ids().len());
    assert!(lines[1..].iter().all(|l| l.contains(",true,")));
    assert_eq!(bin(&["verify", "--suite", "NOPE"]).0, EXIT_INVALID);
}

#[test]
fn sweep_golden_and_output_file() {
    let (code, out) = run(Cmd::Sweep { grid: data("grid.json") });
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("descriptor-id,lambda_K,lambda_L,lambda_tilde_L,delta,delta_prime,duality-case\n"));
    check_golden("sweep_grid.csv", &out);

    let target = std::env::temp_dir().join(format!("genus-calc-sweep-{}.csv", std::process::id()));
    let (code, stdout, _) = bin(&["sweep", data("grid.json").to_str().unwrap(), "-o", target.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), out);
    std::fs::remove_file(target).ok();

    let bad = temp_file("grid.json", "{\"schema\":\"genus-calc/1\",\"ells\":[3]}");
    assert_eq!(bin(&["sweep", bad.to_str().unwrap()]).0, EXIT_IO);
}

#[test]
fn threads_do_not_change_output() {
    let grid = data("grid.json");
    let one = Command::new(env!("CARGO_BIN_EXE_genus-calc"))
        .args(["sweep", grid.to_str().unwrap()])
        .env("GENUS_CALC_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_genus-calc"))
        .args(["sweep", grid.to_str().unwrap()])
        .env("GENUS_CALC_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.stdout, four.stdout);
}
