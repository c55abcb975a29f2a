use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn gwh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwh")).args(args).env("GWH_THREADS", "2").output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_preset(dir: &Path, name: &str) -> PathBuf {
    let p = dir.join(format!("{name}.json"));
    let out = gwh(&["preset", "--name", name, "--out", path(&p)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    p
}

fn write_vec(dir: &Path, name: &str, values: &[[f64; 2]]) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, serde_json::to_string(values).unwrap()).unwrap();
    p
}

fn cwt_rows(csv: &str) -> Vec<(Vec<usize>, [f64; 2])> {
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("h,k,a,zidx,re,im"));
    lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            let idx = f[..4].iter().map(|x| x.parse().unwrap()).collect();
            (idx, [f[4].parse().unwrap(), f[5].parse().unwrap()])
        })
        .collect()
}

#[test]
fn preset_then_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["finite-wh", "units-dilation"] {
        let cfg = write_preset(dir.path(), name);
        for extra in [&[][..], &["--mass-scaled"][..]] {
            let mut args = vec!["verify", "--config", path(&cfg)];
            args.extend_from_slice(extra);
            let out = gwh(&args);
            assert_eq!(out.status.code(), Some(0), "{name} {extra:?}: {}", String::from_utf8_lossy(&out.stderr));
            let report: Value = serde_json::from_slice(&out.stdout).unwrap();
            assert_eq!(report["summary"]["status"], "pass");
            assert_eq!(report["environment"]["config_name"], name);
        }
    }
}

#[test]
fn injected_faults_fail_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path(), "units-dilation");
    for (fault, family) in [("action-table", "action"), ("product-law", "structure")] {
        let out = gwh(&["verify", "--config", path(&cfg), "--inject-fault", fault]);
        assert_eq!(out.status.code(), Some(1), "{fault}");
        let report: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["summary"]["failed_families"], serde_json::json!([family]));
    }
    let out = gwh(&["verify", "--config", path(&cfg), "--inject-fault", "nonsense"]);
    assert!(!out.status.success());
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path(), "finite-wh");
    let a = gwh(&["verify", "--config", path(&cfg), "--seed", "7"]);
    let b = gwh(&["verify", "--config", path(&cfg), "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_gwh"))
        .args(["verify", "--config", path(&cfg), "--seed", "7"])
        .env("GWH_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn repr_writes_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path(), "finite-wh");
    let out_dir = dir.path().join("m");
    let out = gwh(&["repr", "--config", path(&cfg), "--element", "0,3,1,2", "--rep", "pi", "--out", path(&out_dir)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(out_dir.join("matrix.csv")).unwrap();
    let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(csv.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 8);
    let mut nonzero = 0;
    for row in &rows {
        assert_eq!(row.len(), 8);
        for cell in row {
            let (re, im) = cell.split_once(',').unwrap();
            let v: f64 = re.parse::<f64>().unwrap().hypot(im.parse().unwrap());
            if v > 1e-12 {
                assert!((v - 1.0).abs() < 1e-12);
                nonzero += 1;
            }
        }
    }
    assert_eq!(nonzero, 8);
    let json: Value = serde_json::from_str(&fs::read_to_string(out_dir.join("matrix.json")).unwrap()).unwrap();
    assert_eq!(json["dim"], 8);
    assert_eq!(json["rep"], "pi");

    let single = dir.path().join("rho.json");
    let out = gwh(&["repr", "--config", path(&cfg), "--element", "0,1,2,3", "--rep", "rho", "--out", path(&single)]);
    assert!(out.status.success());
    let json: Value = serde_json::from_str(&fs::read_to_string(&single).unwrap()).unwrap();
    assert_eq!(json["dim"], 64);
    assert!(!dir.path().join("rho.csv").exists());
}

#[test]
fn cwt_of_zero_signal_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path(), "finite-wh");
    let window = write_vec(dir.path(), "w.json", &[[1.0, 0.0], [0.5, 0.5], [0.0, -1.0], [0.0, 0.0], [0.2, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 1.0]]);
    let signal = write_vec(dir.path(), "s.json", &[[0.0, 0.0]; 8]);
    let out_dir = dir.path().join("cwt");
    let out = gwh(&["cwt", "--config", path(&cfg), "--rep", "pitilde", "--window", path(&window), "--signal", path(&signal), "--out", path(&out_dir)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = cwt_rows(&fs::read_to_string(out_dir.join("cwt.csv")).unwrap());
    assert_eq!(rows.len(), 512);
    assert!(rows.iter().all(|(_, [re, im])| *re == 0.0 && *im == 0.0));
    let summary: Value = serde_json::from_str(&fs::read_to_string(out_dir.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["energy"], 0.0);
}

#[test]
fn cwt_magnitude_ignores_center() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path(), "finite-wh");
    let mut delta = [[0.0, 0.0]; 8];
    delta[0] = [1.0, 0.0];
    let window = write_vec(dir.path(), "w.json", &delta);
    let signal = write_vec(dir.path(), "s.json", &[[1.0, 0.0], [0.0, 2.0], [-1.0, 0.5], [0.3, 0.3], [0.0, 0.0], [2.0, -1.0], [0.1, 0.0], [0.0, -0.7]]);
    let out_dir = dir.path().join("cwt");
    let out = gwh(&["cwt", "--config", path(&cfg), "--rep", "pi", "--window", path(&window), "--signal", path(&signal), "--out", path(&out_dir)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = cwt_rows(&fs::read_to_string(out_dir.join("cwt.csv")).unwrap());
    for chunk in rows.chunks(8) {
        let key = &chunk[0].0[..3];
        let mag = chunk[0].1[0].hypot(chunk[0].1[1]);
        for (idx, [re, im]) in chunk {
            assert_eq!(&idx[..3], key);
            assert!((re.hypot(*im) - mag).abs() < 1e-12);
        }
    }
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(summary["reconstruction_residual"].as_f64().unwrap() < 1e-9);
}

#[test]
fn admissibility_reports_calderon() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_preset(dir.path(), "units-dilation");
    let window = write_vec(dir.path(), "w.json", &vec![[0.3, -0.1]; 25]);
    let out_file = dir.path().join("adm.json");
    let out = gwh(&["admissibility", "--config", path(&cfg), "--window", path(&window), "--out", path(&out_file)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&fs::read_to_string(&out_file).unwrap()).unwrap();
    assert_eq!(report["calderon"].as_array().unwrap().len(), 25);
    let (min, max) = (report["min"].as_f64().unwrap(), report["max"].as_f64().unwrap());
    assert!(min <= max);
    assert!(report["c_psi"].as_f64().unwrap() > 0.0);
    assert!(report["energy_residual"].as_f64().unwrap() < 1e-9);
}

#[test]
fn bad_torus_order_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    fs::write(&cfg, r#"{"orders":[4],"h_spec":{"kind":"trivial"},"torus_order":3}"#).unwrap();
    let out = gwh(&["verify", "--config", path(&cfg)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exponent 4 does not divide 3"));
    let out = gwh(&["preset", "--name", "nope", "--out", path(&dir.path().join("x.json"))]);
    assert_eq!(out.status.code(), Some(2));
}
