use std::fs;
use std::process::{Command, Output};

use quasiproj_cli::export::{format_number, from_json};

fn quasiproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasiproj")).args(args).output().unwrap()
}

fn stderr_line(out: &Output) -> String {
    let s = String::from_utf8_lossy(&out.stderr).to_string();
    assert_eq!(s.lines().count(), 1, "{s}");
    s.trim_end().to_string()
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["project", "--group", "F4", "--plane", "9"], 2, "error[config]"),
        (&["project", "--group", "X4"], 2, "error[config]"),
        (&["project", "--bogus"], 2, "error[config]"),
        (&["project", "--group", "B6", "--lattice", "weight"], 3, "error[unsupported]"),
        (&["project", "--group", "E6", "--budget", "10"], 4, "error[budget]"),
        (&["orbit", "--group", "E6", "--seed", "1,2,3,4,5,6", "--budget", "100"], 4, "error[budget]"),
        (&["window", "--group", "D5", "--perp", "2,3"], 3, "error[unsupported]"),
        (&["verify", "--suite", "nope"], 2, "error[config]"),
        (&["project", "--config", "/nonexistent/recipe.conf"], 1, "error[io]"),
    ];
    for (args, code, prefix) in cases {
        let out = quasiproj(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}");
        assert!(stderr_line(&out).starts_with(prefix), "{args:?}");
    }
}

#[test]
fn window_prints_count_and_radius() {
    let out = quasiproj(&["window", "--group", "E6", "--lattice", "weight", "--perp", "1,3,4,6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("vertices 720"));
    // √6/3 to 12 significant digits
    assert!(text.contains("R0 0.816496580928"), "{text}");
}

#[test]
fn orbit_and_eigen() {
    let out = quasiproj(&["orbit", "--group", "E6", "--seed", "0,0,1,0,0,0", "--scale", "1/3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "720");
    let out = quasiproj(&["orbit", "--group", "F4", "--seed", "1,0,0,0", "--basis", "root", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 24);
    let out = quasiproj(&["eigen", "--group", "B6"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1 + 1 + 6 + 1);
}

#[test]
fn config_file_with_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    let json = dir.path().join("out.json");
    fs::write(&conf, format!("group = B6\nplane = 1\nrange = 2\nedges = on\njson = {}\n", json.display())).unwrap();
    let out = quasiproj(&["project", "--config", conf.to_str().unwrap(), "--plane", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("symmetry   4 with mirror"), "{stdout}");
    let doc = from_json(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc.meta.plane, [2, 5]);
    assert_eq!(doc.meta.count, doc.points.len());
    assert!(!doc.edges.is_empty());
}

#[test]
fn exports_agree() {
    let dir = tempfile::tempdir().unwrap();
    let p = |e: &str| dir.path().join(format!("e6.{e}"));
    let out = Command::new(env!("CARGO_BIN_EXE_quasiproj"))
        .args(["project", "--group", "E6", "--lattice", "weight", "--plane", "2", "--edges"])
        .arg("--csv")
        .arg(p("csv"))
        .arg("--json")
        .arg(p("json"))
        .arg("--svg")
        .arg(p("svg"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let csv = fs::read_to_string(p("csv")).unwrap();
    let doc = from_json(&fs::read_to_string(p("json")).unwrap()).unwrap();
    let svg = fs::read_to_string(p("svg")).unwrap();

    // JSON round trip reproduces the CSV text exactly
    let mut rows = vec!["x,y".to_string()];
    rows.extend(doc.points.iter().map(|&[x, y]| format!("{},{}", format_number(x), format_number(y))));
    assert_eq!(csv, rows.join("\n") + "\n");
    assert_eq!(svg.matches("<line ").count(), doc.edges.len());
    assert_eq!(svg.matches("<circle ").count(), doc.points.len());
}

#[test]
fn range_zero() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("o.csv");
    let out = quasiproj(&["project", "--group", "F4", "--range", "0", "--csv", csv.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(csv).unwrap(), "x,y\n0,0\n");
}

#[test]
fn verify_algebraic_suites() {
    for suite in ["exponents", "orbits", "orders", "frames"] {
        let out = quasiproj(&["verify", "--suite", suite]);
        assert!(out.status.success(), "{suite}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
