use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn quasisep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasisep"))
        .args(args)
        .env_remove("QUASISEP_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_state(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_str = path.to_str().unwrap().to_string();
    let mut full = args.to_vec();
    full.extend(["--out", &path_str]);
    let out = quasisep(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path_str
}

#[test]
fn separable_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let product = write_state(dir.path(), "product.json", &["--m", "3", "--n", "2", "state", "product"]);
    let out = quasisep(&["separable", &product]);
    assert_eq!(out.status.code(), Some(0));
    let verdict: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(verdict["status"], "separable");
    assert_eq!(verdict["method"], "closed_form_fixed_N");
    assert_eq!(verdict["witness"]["m"], 3);
    assert_eq!(verdict["witness"]["n"], 2);

    let eigen = write_state(dir.path(), "eigen.json", &["--n", "3", "state", "eigen", "--branch", "plus"]);
    assert_eq!(quasisep(&["separable", &eigen, "--method", "condition"]).status.code(), Some(1));
    assert_eq!(quasisep(&["separable", &eigen]).status.code(), Some(1));
    let bilinear = quasisep(&["--restarts", "4", "separable", &eigen, "--method", "bilinear"]);
    assert_eq!(bilinear.status.code(), Some(2));
    let verdict: Value = serde_json::from_str(&stdout(&bilinear)).unwrap();
    assert_eq!(verdict["status"], "inconclusive");

    let square = write_state(dir.path(), "square.json", &["--n", "4", "state", "eigen", "--branch", "minus"]);
    let out = quasisep(&["separable", &square, "--method", "condition"]);
    assert_eq!(out.status.code(), Some(0));
    let verdict: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(verdict["witness"]["m"], 1);
    assert_eq!(verdict["witness"]["n"], 3);
}

#[test]
fn bad_inputs_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let product = write_state(dir.path(), "p.json", &["--m", "1", "--n", "1", "state", "product"]);
    let text = std::fs::read_to_string(&product).unwrap();
    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(quasisep(&["separable", truncated.to_str().unwrap()]).status.code(), Some(3));
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"modes\": 7}").unwrap();
    assert_eq!(quasisep(&["separable", garbage.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(quasisep(&["separable", "/nonexistent/state.json"]).status.code(), Some(3));

    let mixed = dir.path().join("mixed.json");
    std::fs::write(
        &mixed,
        r#"{"modes":[{"kind":"fermionic","cutoff":1},{"kind":"bosonic","cutoff":2}],"amplitudes":[{"occ":[0,0],"re":1.0,"im":0.0},{"occ":[0,1],"re":1.0,"im":0.0}]}"#,
    )
    .unwrap();
    assert_eq!(quasisep(&["separable", mixed.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(
        quasisep(&["separable", mixed.to_str().unwrap(), "--method", "bilinear", "--restarts", "2"]).status.code(),
        Some(2)
    );

    assert_eq!(quasisep(&[]).status.code(), Some(3));
    assert_eq!(quasisep(&["bands"]).status.code(), Some(3));
    assert_eq!(quasisep(&["--kappa-re", "0", "noon-circle"]).status.code(), Some(3));
    assert_eq!(quasisep(&["--m", "2", "--n", "0", "expand", "--picture", "FF"]).status.code(), Some(3));
    assert_eq!(quasisep(&["--format", "xml", "bands"]).status.code(), Some(3));
    assert_eq!(quasisep(&["--help"]).status.code(), Some(0));
    assert_eq!(quasisep(&["--version"]).status.code(), Some(0));
}

#[test]
fn expand_rows() {
    let out = quasisep(&["--m", "2", "--n", "0", "expand", "--picture", "FB_quasi"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "picture,m,n,ket,re,im");
    assert_eq!(lines.len(), 3);
    let parse = |line: &str| -> f64 { line.split(',').nth_back(1).unwrap().parse().unwrap() };
    assert!(lines[1].starts_with("FB_quasi,2,0,\"|0,2>\""));
    assert!((parse(lines[1]) - 1.0 / 3f64.sqrt()).abs() < 1e-15);
    assert!(lines[2].starts_with("FB_quasi,2,0,\"|1,1>\""));
    assert!((parse(lines[2]) - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);

    let bb = stdout(&quasisep(&["--m", "1", "--n", "1", "expand", "--picture", "BB"]));
    let values: Vec<f64> = bb.lines().skip(1).map(parse).collect();
    assert_eq!(values.len(), 2);
    assert!((values[0] - values[1]).abs() > 1.0);
    assert!(values.iter().all(|v| (v.abs() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15));

    let ff = stdout(&quasisep(&["--m", "1", "--n", "1", "expand", "--picture", "FF"]));
    assert_eq!(ff.lines().count(), 2);
    assert!(ff.contains("\"|1,1>\""));
}

#[test]
fn eigencheck_perfect_squares() {
    let text = stdout(&quasisep(&["--n", "20", "eigencheck"]));
    let mut separable_sectors: Vec<u32> = text
        .lines()
        .skip(1)
        .filter(|l| l.split(',').nth(2) == Some("true"))
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    separable_sectors.dedup();
    assert_eq!(separable_sectors, vec![1, 4, 9, 16]);
}

#[test]
fn bands_precision_and_json() {
    let text = stdout(&quasisep(&["--omega-f", "2", "bands", "--ratio-max", "1", "--steps", "3"]));
    let row = text.lines().nth(2).unwrap();
    assert_eq!(row.split(',').next(), Some("5.0000000000000000e-1"));
    let json = stdout(&quasisep(&["--omega-f", "2", "--format", "json", "bands", "--steps", "4"]));
    let rows: Vec<Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["kappa_over_delta"], 0.0);
}

#[test]
fn noon_circle_lists_samples_and_exact_points() {
    let text = stdout(&quasisep(&["--n", "1", "--omega-f", "1.3", "--kappa-im", "0.4", "noon-circle", "--samples", "40"]));
    let kinds: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(kinds.iter().filter(|k| **k == "sample").count(), 40);
    assert_eq!(kinds.iter().filter(|k| **k == "exact").count(), 2);
    assert_eq!(kinds.iter().filter(|k| **k == "snapped").count(), 4);
    for line in text.lines().filter(|l| l.starts_with("exact") || l.starts_with("snapped")) {
        assert_eq!(line.split(',').nth(8), Some("separable"), "{line}");
    }
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let eigen = write_state(dir.path(), "e.json", &["--n", "2", "state", "eigen"]);
    let runs: [&[&str]; 4] = [
        &["--n", "5", "noon-circle", "--samples", "500"],
        &["--omega-f", "1.5", "bands"],
        &["--n", "12", "--kappa-re", "0.3", "eigencheck"],
        &["--seed", "99", "--restarts", "6", "separable", &eigen, "--method", "bilinear"],
    ];
    for (i, args) in runs.iter().enumerate() {
        let mut outputs = Vec::new();
        for k in 0..2 {
            let path = dir.path().join(format!("run{i}_{k}.out"));
            let mut full = args.to_vec();
            full.extend(["--out", path.to_str().unwrap()]);
            quasisep(&full);
            outputs.push(std::fs::read(&path).unwrap());
        }
        assert!(!outputs[0].is_empty());
        assert_eq!(outputs[0], outputs[1], "{args:?}");
    }
}

#[test]
fn seed_falls_back_to_environment() {
    let dir = tempfile::tempdir().unwrap();
    let eigen = write_state(dir.path(), "e.json", &["--n", "2", "state", "eigen"]);
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_quasisep"));
        cmd.env_remove("QUASISEP_SEED");
        if let Some(seed) = env {
            cmd.env("QUASISEP_SEED", seed);
        }
        let mut args = vec!["--restarts", "3"];
        args.extend_from_slice(extra);
        args.extend(["separable", &eigen, "--method", "bilinear"]);
        cmd.args(&args).output().unwrap().stdout
    };
    assert_eq!(run(Some("42"), &[]), run(None, &["--seed", "42"]));
}
