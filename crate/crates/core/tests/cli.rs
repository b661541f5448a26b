use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn crwedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crwedge")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

const GOOD2S: &str = r#"{"oracle": {"name": "good2s"}, "mode": "two_sided",
    "delta": 0.2, "sigma": 0.02, "alpha": 0.25, "N_coeffs": 64}"#;

#[test]
fn gallery_commands() {
    let o = crwedge(&["gallery", "list"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["good2s", "entire", "onesided", "cordaro", "flat"]);

    let o = crwedge(&["gallery", "eval", "good2s", "0", "0"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["value"][0].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-15);
    assert_eq!(v["formula"], "1/(3 - z1 - z2)");

    let o = crwedge(&["gallery", "eval", "cordaro", "0.5", "0.25"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["value"][0].as_f64().unwrap() - 0.239_712_769_3).abs() < 1e-9);

    assert_eq!(code(&crwedge(&["gallery", "eval", "missing", "0", "0"])), 2);
    // onesided pole at z2 = z1 + i h
    assert_eq!(code(&crwedge(&["gallery", "eval", "onesided", "0", "0.5i"])), 2);
}

#[test]
fn march_writes_atlas_and_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "onesided.json",
        r#"{"oracle": {"name": "onesided", "params": [0.5]}, "mode": "one_sided_up",
            "delta": 0.2, "sigma": 0.02, "alpha": 0.25, "N_coeffs": 48}"#,
    );
    let out = dir.path().join("atlas.json");
    let o = crwedge(&["march", "--config", &cfg, "--out", out.to_str().unwrap(), "--workers", "2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let table = String::from_utf8(o.stdout).unwrap();
    assert_eq!(table.lines().filter(|l| l.contains(" pass ")).count(), 16);
    let atlas: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(atlas["job"]["oracle"]["name"], "onesided");
    let steps = atlas["diagnostics"]["steps_forward"].as_u64().unwrap() as f64;
    assert!(steps * (0.15 - 0.02) > 1.0);
    let certs: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("atlas.certificates.json")).unwrap()).unwrap();
    assert_eq!(certs.as_array().unwrap().len(), 17);
}

#[test]
fn march_rejects_bad_configs() {
    let dir = tempfile::tempdir().unwrap();
    let zero_alpha = write(dir.path(), "a.json", &GOOD2S.replace("0.25", "0"));
    assert_eq!(code(&crwedge(&["march", "--config", &zero_alpha])), 2);
    let unknown = write(dir.path(), "b.json", &GOOD2S.replace("\"delta\"", "\"colour\": 1, \"delta\""));
    assert_eq!(code(&crwedge(&["march", "--config", &unknown])), 2);
    assert_eq!(code(&crwedge(&["march", "--config", "/nonexistent.json"])), 2);
    // flat has no common slice disc around x1 = 0
    let flat = write(dir.path(), "c.json", &GOOD2S.replace("good2s", "flat"));
    let o = crwedge(&["march", "--config", &flat, "--out", dir.path().join("f.json").to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("collapses"));
}

#[test]
fn report_slices() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "job.json", GOOD2S);
    let atlas = dir.path().join("atlas.json");
    let atlas = atlas.to_str().unwrap();
    assert_eq!(code(&crwedge(&["march", "--config", &cfg, "--out", atlas])), 0);

    let slice = write(
        dir.path(),
        "slice.json",
        r#"{"base": [[0, 0], [0, 0]], "axes": [
            {"coord": "z1_re", "from": -0.9, "to": 0.9, "n": 7},
            {"coord": "z2_re", "from": -0.6, "to": 0.6, "n": 5}]}"#,
    );
    let a = crwedge(&["report", atlas, "--config", &slice]);
    assert_eq!(code(&a), 0);
    let mut rows = csv::Reader::from_reader(a.stdout.as_slice());
    assert_eq!(
        rows.headers().unwrap(),
        vec!["z1_re", "z1_im", "z2_re", "z2_im", "F_re", "F_im", "chart_id", "tail_bound"]
    );
    let mut count = 0;
    for r in rows.records() {
        let r = r.unwrap();
        let f = |i: usize| r[i].parse::<f64>().unwrap();
        let exact = 1.0 / (3.0 - f(0) - f(2));
        assert!((f(4) - exact).abs() < 1e-6 && f(5).abs() < 1e-6);
        count += 1;
    }
    assert_eq!(count, 35);
    let b = crwedge(&["report", atlas, "--config", &slice]);
    assert_eq!(a.stdout, b.stdout);

    let outside = write(
        dir.path(),
        "outside.json",
        r#"{"base": [[0, 0], [0, 0]], "axes": [{"coord": "z2_im", "from": 0.8, "to": 1.2, "n": 3}]}"#,
    );
    let o = crwedge(&["report", atlas, "--config", &outside]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside every chart"));
}

#[test]
fn verify_suites() {
    for suite in ["discs", "probes"] {
        let o = crwedge(&["verify", suite]);
        assert_eq!(code(&o), 0, "{suite}");
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["suite"], suite);
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    }
    // an impossible tolerance turns passing checks into failures
    assert_eq!(code(&crwedge(&["--tolerance-scale", "1e-30", "verify", "discs"])), 1);
    assert_eq!(code(&crwedge(&["verify", "everything"])), 2);
}
