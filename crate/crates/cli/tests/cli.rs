use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn hoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hoc")).args(args).output().expect("spawn hoc")
}

fn config(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

fn shipped(name: &str) -> Value {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(name);
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

fn small_scan() -> Value {
    let mut v = shipped("stability_2d.json");
    v["samples"] = json!(6);
    v["modes"] = json!(8);
    v
}

fn small_manufactured() -> Value {
    let mut v = shipped("manufactured_2d.json");
    v["grids"] = json!([4, 8]);
    v
}

fn run(cmd: &str, cfg: &Path, out: &Path, extra: &[&str]) -> Output {
    let mut args = vec![cmd, "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    hoc(&args)
}

#[test]
fn shipped_configs_parse() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), "p.json", &shipped("smooth_preview.json"));
    let o = run("smooth-preview", &cfg, &dir.path().join("p.csv"), &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for name in ["convergence_2d.json", "convergence_tanh.json", "convergence_3d.json"] {
        let v = shipped(name);
        let study: hoc_core::harness::BasketStudy = serde_json::from_value(v).unwrap();
        study.validate().unwrap();
    }
    let m: hoc_core::harness::ManufacturedStudy = serde_json::from_value(shipped("manufactured_3d.json")).unwrap();
    m.validate().unwrap();
    let _: hoc_core::harness::PriceCheck = serde_json::from_value(shipped("mc_check.json")).unwrap();
}

#[test]
fn missing_config_exits_2() {
    let o = hoc(&["stability"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--config"));
}

#[test]
fn unknown_flag_exits_2() {
    assert_eq!(hoc(&["stability", "--bogus"]).status.code(), Some(2));
    assert_eq!(hoc(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn malformed_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    assert_eq!(run("stability", &bad, &dir.path().join("o.csv"), &[]).status.code(), Some(2));
    let wrong = config(dir.path(), "w.json", &json!({"dim": 2}));
    assert_eq!(run("stability", &wrong, &dir.path().join("o.csv"), &[]).status.code(), Some(2));
    let missing = dir.path().join("absent.json");
    assert_eq!(run("stability", &missing, &dir.path().join("o.csv"), &[]).status.code(), Some(2));
}

#[test]
fn invalid_parameters_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = small_manufactured();
    v["grids"] = json!([8, 4]);
    let cfg = config(dir.path(), "m.json", &v);
    assert_eq!(run("manufactured", &cfg, &dir.path().join("m.csv"), &[]).status.code(), Some(2));

    let mut v = shipped("smooth_preview.json");
    v["market"]["sigma"] = json!([0.25, -0.35]);
    let cfg = config(dir.path(), "p.json", &v);
    assert_eq!(run("smooth-preview", &cfg, &dir.path().join("p.csv"), &[]).status.code(), Some(2));

    let mut v = small_scan();
    v["a"] = json!([0.1, 1.0]);
    let cfg = config(dir.path(), "s.json", &v);
    let o = run("stability", &cfg, &dir.path().join("s.csv"), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!dir.path().join("s.csv").exists());
}

#[test]
fn solver_failure_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = small_manufactured();
    v["solver"] = json!({"rel_tol": 1e-300, "max_iter": 1, "preconditioner": "jacobi"});
    let cfg = config(dir.path(), "m.json", &v);
    let o = run("manufactured", &cfg, &dir.path().join("m.csv"), &[]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn writes_csv_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), "m.json", &small_manufactured());
    let out = dir.path().join("m.csv");
    let o = run("manufactured", &cfg, &out, &["--arm", "hoc"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let csv = fs::read_to_string(&out).unwrap();
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines[0], "scheme,cells,h,dt,steps,l2,linf");
    assert_eq!(lines.len(), 3);
    assert!(lines[1..].iter().all(|l| l.starts_with("hoc,")));

    let m: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("m.manifest.json")).unwrap()).unwrap();
    assert_eq!(m["command"], "manufactured");
    assert_eq!(m["arm"], "hoc");
    assert_eq!(m["config"]["grids"], json!([4, 8]));
    assert!(m["wall_seconds"].as_f64().unwrap() >= 0.0);
    assert_eq!(m["summary"]["timings"].as_array().unwrap().len(), 2);
    assert!(m["summary"]["orders"][0]["l2"].as_f64().unwrap().is_finite());
}

#[test]
fn output_is_deterministic_across_threads() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), "s.json", &small_scan());
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    assert!(run("stability", &cfg, &a, &["--threads", "1"]).status.success());
    assert!(run("stability", &cfg, &b, &["--threads", "3"]).status.success());
    let ta = fs::read(&a).unwrap();
    assert_eq!(ta, fs::read(&b).unwrap());
    // header plus 6 samples x 4 mesh ratios for each scheme
    assert_eq!(String::from_utf8(ta).unwrap().lines().count(), 1 + 2 * 6 * 4);

    let cfg = config(dir.path(), "m.json", &small_manufactured());
    let c = dir.path().join("c.csv");
    let d = dir.path().join("d.csv");
    assert!(run("manufactured", &cfg, &c, &["--threads", "1"]).status.success());
    assert!(run("manufactured", &cfg, &d, &["--threads", "2"]).status.success());
    assert_eq!(fs::read(&c).unwrap(), fs::read(&d).unwrap());
}

#[test]
fn mc_seed_is_recorded_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = shipped("mc_check.json");
    v["cells"] = json!(20);
    v["paths"] = json!(20000);
    let cfg = config(dir.path(), "mc.json", &v);
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let o = run("mc-check", &cfg, &a, &["--seed", "7", "--arm", "baseline"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(run("mc-check", &cfg, &b, &["--seed", "7", "--arm", "baseline", "--threads", "1"]).status.success());
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let m: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("a.manifest.json")).unwrap()).unwrap();
    assert_eq!(m["seed"], 7);
}

#[test]
fn preview_marks_kink_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), "p.json", &shipped("smooth_preview.json"));
    let out = dir.path().join("p.csv");
    assert!(run("smooth-preview", &cfg, &out, &[]).status.success());
    let mut rdr = csv::Reader::from_path(&out).unwrap();
    assert_eq!(rdr.headers().unwrap().iter().collect::<Vec<_>>(), ["node", "x1", "x2", "raw", "smoothed", "in_set"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 21 * 21);
    let marked = rows.iter().filter(|r| &r[5] == "true").count();
    assert!(marked > 0 && marked < rows.len());
    for r in rows.iter().filter(|r| &r[5] == "false") {
        assert_eq!(&r[3], &r[4]);
    }
}
