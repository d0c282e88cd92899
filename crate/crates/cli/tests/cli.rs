//! End-to-end tests ofit the command-line surface: exit codes, report JSON
//! structure, byte stability, CSV shapes and the fixture suite.

use std::process::{Command, Output};

fn pfaff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfaff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn pfaff_env(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pfaff"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn analyze_exit_codes_partition_outcomes() {
    // hyperbolic → incompatible → 2
    let out = pfaff(&["analyze", "y*dx - i*x*dy"]);
    assert_eq!(out.status.code(), Some(2));
    // saddle-node with real weak multiplier → compatible → 0
    let out = pfaff(&["analyze", "x*(1+(1/2)*y)*dy - y^2*dx"]);
    assert_eq!(out.status.code(), Some(0));
    // saddle-node with non-real weak multiplier → incompatible → 2
    let out = pfaff(&["analyze", "x*(1+i*y)*dy - y^2*dx"]);
    assert_eq!(out.status.code(), Some(2));
    // saddle-node not in normal form → inconclusive → 3
    let out = pfaff(&["analyze", "x*dy - (y^2 + x^3)*dx"]);
    assert_eq!(out.status.code(), Some(3));
    // parse error → 1
    let out = pfaff(&["analyze", "x*(1+)*dy"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    // conjugated (real-form) input is not a holomorphic germ → 1
    let out = pfaff(&["analyze", "conj(x)*dx + x*d(conj(x))"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_report_structure() {
    let out = pfaff(&["analyze", "y*dx - i*x*dy"]);
    let report = stdout_json(&out);
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["verdict"]["outcome"], "incompatible");
    assert_eq!(report["reduction"]["nodes"][0]["class"], "hyperbolic");
    assert_eq!(report["reduction"]["nodes"][0]["multiplier_exact"], "i");
    assert_eq!(
        report["verdict"]["reasons"][0]["rule"],
        "hyperbolic-exclusion"
    );
    // exact scalars are strings
    assert!(report["reduction"]["nodes"][0]["camacho_sad_x_axis"].is_string());
}

#[test]
fn analyze_dicritical_annotation() {
    let out = pfaff(&["analyze", "y*dx - x*dy"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["verdict"]["dicritical"], true);
    assert!(report["verdict"]["dicritical_note"].is_string());
    assert_eq!(report["reduction"]["components"][0]["invariant"], false);
}

#[test]
fn analyze_cusp_reduction_summary() {
    let out = pfaff(&["analyze", "2*y*dy - 3*x^2*dx"]);
    let report = stdout_json(&out);
    let components = report["reduction"]["components"].as_array().unwrap();
    assert_eq!(components.len(), 3);
    assert!(components.iter().all(|c| c["invariant"] == true));
    // adjacency is the chain structure after three point blow-ups
    assert!(report["reduction"]["adjacency"].as_array().unwrap().len() >= 2);
}

#[test]
fn reports_are_byte_stable_across_runs() {
    let a = pfaff(&["analyze", "x*(1+(1/2)*y)*dy - y^2*dx", "--evidence"]);
    let b = pfaff(&["analyze", "x*(1+(1/2)*y)*dy - y^2*dx", "--evidence"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn env_overrides_and_flag_precedence() {
    // environment sets an absurdly small depth → reduction error → exit 1
    let out = pfaff_env(&["analyze", "2*y*dy - 3*x^2*dx"], &[("PFAFF_MAX_DEPTH", "1")]);
    assert_eq!(out.status.code(), Some(1));
    // a flag overrides the environment; the cusp reduces fine and its
    // resonant leaves, not being in normal form, leave the verdict open
    let out = pfaff_env(
        &["analyze", "2*y*dy - 3*x^2*dx", "--max-depth", "20"],
        &[("PFAFF_MAX_DEPTH", "1")],
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn holonomy_summary_fields() {
    let out = pfaff(&["holonomy", "-k", "1", "--mu", "0", "--seed-re", "0.05"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["orbit"]["class"], "Flower");
    let d = v["derivative_at_zero"]["re"].as_f64().unwrap();
    assert!((d - 1.0).abs() < 1e-6);
    // resonant: derivative −1 for (p, q) = (1, 2)
    let out = pfaff(&[
        "holonomy", "-k", "1", "--mu", "1/2", "-p", "1", "-q", "2",
    ]);
    let v = stdout_json(&out);
    let d = v["derivative_at_zero"]["re"].as_f64().unwrap();
    assert!((d + 1.0).abs() < 1e-6);
}

#[test]
fn trace_holonomy_orbit_csv() {
    let dir = std::env::temp_dir().join("pfaff-test-orbit");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orbit.csv");
    let out = pfaff(&[
        "trace",
        "holonomy-orbit",
        "-k",
        "1",
        "--mu",
        "0",
        "--seed-re",
        "0.1",
        "-n",
        "200",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,re,im,modulus");
    assert_eq!(lines.len(), 201, "header plus 200 iterates");
    // |v_n| decreases beyond the first few iterates
    let modulus = |line: &str| -> f64 { line.split(',').nth(3).unwrap().parse().unwrap() };
    for w in lines[6..].windows(2) {
        assert!(modulus(w[1]) <= modulus(w[0]) * (1.0 + 1e-9));
    }
    // determinism
    let again = pfaff(&[
        "trace",
        "holonomy-orbit",
        "-k",
        "1",
        "--mu",
        "0",
        "--seed-re",
        "0.1",
        "-n",
        "200",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn trace_transversal_leaf_and_level_set() {
    let dir = std::env::temp_dir().join("pfaff-test-trace");
    std::fs::create_dir_all(&dir).unwrap();
    let leaf = dir.join("leaf.csv");
    let out = pfaff(&[
        "trace",
        "transversal-leaf",
        "--alpha",
        "1+i",
        "--seed-re",
        "0.3",
        "-o",
        leaf.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&leaf).unwrap();
    assert!(text.starts_with("s,re,im,modulus\n"));
    assert!(text.lines().count() > 100);

    let factors = dir.join("factors.json");
    std::fs::write(
        &factors,
        r#"[{"factor": "x", "residue": "1"}, {"factor": "y", "residue": "-1/2"}]"#,
    )
    .unwrap();
    let level = dir.join("level.csv");
    let out = pfaff(&[
        "trace",
        "level-set",
        "--factors",
        factors.to_str().unwrap(),
        "-c",
        "1",
        "-o",
        level.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&level).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,abs_y,abs_x");
    // nodal separator |x| = c·|y|^{1/2}: check one row against the closed form
    let row: Vec<f64> = lines[10]
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert!((row[2] - row[1].sqrt()).abs() < 1e-12);
}

#[test]
fn trace_crossing_scan_csv() {
    let dir = std::env::temp_dir().join("pfaff-test-scan");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.csv");
    let out = pfaff(&[
        "trace",
        "crossing-scan",
        "--alpha",
        "1",
        "--seeds",
        "4",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "seed_re,seed_im,ray_angle,count");
    assert_eq!(lines.len(), 5);
    // circles: every seed crosses the ray exactly once
    for line in &lines[1..] {
        assert_eq!(line.split(',').nth(3).unwrap(), "1");
    }
}

#[test]
fn log_input_analysis() {
    let dir = std::env::temp_dir().join("pfaff-test-log");
    std::fs::create_dir_all(&dir).unwrap();
    let factors = dir.join("factors.json");
    std::fs::write(
        &factors,
        r#"[{"factor": "x", "residue": "1"}, {"factor": "y", "residue": "1"}]"#,
    )
    .unwrap();
    // dx/x + dy/y induces y dx + x dy: resonant(1,1), compatible
    let out = pfaff(&["analyze", "--log-input", factors.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["input"]["kind"], "logarithmic with real residues");
    assert_eq!(report["reduction"]["nodes"][0]["class"], "resonant(1,1)");
}

#[test]
fn analyze_extension_centers_serialize() {
    // the first blow-up of this germ meets t³ = 2: three symbolic centers
    let out = pfaff(&["analyze", "3*y^2*dy - 6*x^2*dx"]);
    assert_eq!(out.status.code(), Some(3));
    let report = stdout_json(&out);
    let nodes = report["reduction"]["nodes"].as_array().unwrap();
    let resonant: Vec<_> = nodes
        .iter()
        .filter(|n| n["class"] == "resonant(1,3)")
        .collect();
    assert_eq!(resonant.len(), 3);
    for n in &resonant {
        let center = n["center"].as_str().unwrap();
        assert!(center.contains("root("), "center: {}", center);
        assert_eq!(n["multiplier_exact"], "-1/3");
    }
}

#[test]
fn check_runs_builtin_fixtures() {
    let out = pfaff(&["check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 failed"));
    assert!(text.lines().filter(|l| l.contains("pass")).count() >= 10);
}

#[test]
fn check_reports_fixture_failures() {
    let dir = std::env::temp_dir().join("pfaff-test-check");
    std::fs::create_dir_all(&dir).unwrap();
    let fixtures = dir.join("fixtures.json");
    std::fs::write(
        &fixtures,
        r#"[{"kind": "closedness", "numerator": "y*dx", "denominator": "x", "expect": true}]"#,
    )
    .unwrap();
    let out = pfaff(&["check", "--fixtures", fixtures.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn json_flag_writes_file() {
    let dir = std::env::temp_dir().join("pfaff-test-json");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = pfaff(&[
        "analyze",
        "y*dx + x*dy",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["verdict"]["outcome"], "compatible");
}
