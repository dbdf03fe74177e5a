use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn mrv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mrv")).args(args).env_remove("MRV_CONFIG").output().expect("run mrv")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against `tests/golden/<name>`; `MRV_UPDATE_GOLDEN=1` rewrites it.
fn assert_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("MRV_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from {name}");
}

#[test]
fn piece_examples() {
    for (args, want) in [
        (["piece", "--ring", "motivic-z2", "--deg", "4,2"], "(Z/2)^2: {τ^-2·w2^2, y02}\n"),
        (["piece", "--ring", "classical-z", "--deg", "0"], "Z: {1}\n"),
        (["piece", "--ring", "motivic-z", "--deg", "7,4"], "(Z/2)^2: {A(0)·d2, B(0)}\n"),
        (["piece", "--ring", "motivic-z", "--deg", "6,3"], "Z/2: {d3}\n"),
        (["piece", "--ring", "chow", "--deg", "8,4"], "Z^3: {d2^2, d2·y2, d4}\n"),
    ] {
        let o = mrv(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o), want, "{args:?}");
    }
}

#[test]
fn piece_usage_errors_exit_2() {
    for args in [
        &["piece", "--ring", "motivic-z", "--deg", "7"][..],
        &["piece", "--ring", "classical-z", "--deg", "7,0"],
        &["piece", "--ring", "no-such-ring", "--deg", "0"],
        &["piece", "--ring", "chow", "--deg", "x,1"],
        &["piece", "--ring", "chow"],
        &["frobnicate"],
    ] {
        assert_eq!(mrv(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_classical_z2_rows() {
    let o = mrv(&["table", "--ring", "classical-z2", "--pmax", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_golden("table_classical_z2.csv", &stdout(&o));
}

#[test]
fn table_chow_golden() {
    let o = mrv(&["table", "--ring", "chow", "--pmax", "8", "--qmax", "4", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    assert_golden("table_chow.md", &stdout(&o));
}

#[test]
fn table_motivic_z2_golden() {
    let o = mrv(&["table", "--ring", "motivic-z2", "--pmax", "8", "--qmax", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_golden("table_motivic_z2.json", &stdout(&o));
}

#[test]
fn table_empty_box_is_one_cell() {
    let o = mrv(&["table", "--ring", "motivic-z", "--pmax", "0", "--qmax", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["group"], "Z");
    assert_eq!((cells[0]["p"].as_i64(), cells[0]["q"].as_i64()), (Some(0), Some(0)));
}

#[test]
fn table_bad_ring_exit_2() {
    assert_eq!(mrv(&["table", "--ring", "bsu"]).status.code(), Some(2));
}

#[test]
fn verify_small_box_passes() {
    let o = mrv(&["verify", "--pmax", "0", "--qmax", "0", "--mmax", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_golden("verify_small_box.json", &stdout(&o));
}

#[test]
fn verify_json_matches_schema() {
    let o = mrv(&["verify", "--pmax", "12", "--qmax", "8", "--mmax", "12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for r in v.as_array().unwrap() {
        let obj = r.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["box", "check", "findings", "status"]);
        assert!(r["check"].is_string());
        for k in ["p_max", "q_max", "m_max"] {
            assert!(r["box"][k].is_i64());
        }
        assert!(["pass", "fail", "report"].contains(&r["status"].as_str().unwrap()));
        for f in r["findings"].as_array().unwrap() {
            let mut keys: Vec<&str> = f.as_object().unwrap().keys().map(String::as_str).collect();
            keys.sort();
            assert_eq!(keys, ["bidegree", "computed", "expected", "witness"]);
            assert_eq!(f["bidegree"].as_array().unwrap().len(), 2);
            assert!(f["witness"].as_array().unwrap().iter().all(|w| w.is_string()));
        }
    }
}

#[test]
fn verify_output_is_deterministic_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "4", "4"] {
        let path = dir.path().join(format!("r{}.json", outputs.len()));
        let o = mrv(&["verify", "--format", "json", "--jobs", jobs, "--out", path.to_str().unwrap()]);
        assert!(o.stdout.is_empty());
        outputs.push((o.status.code(), std::fs::read(&path).unwrap()));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn verify_default_suite_reports_known_failures() {
    let o = mrv(&["verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failing: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "fail")
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["uct-motivic", "mu-torsion-injective"]);
}

#[test]
fn report_only_findings_do_not_fail_the_run() {
    let o = mrv(&["verify", "--checks", "presentation-vs-uct", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "report");
    assert!(!v[0]["findings"].as_array().unwrap().is_empty());
}

#[test]
fn verify_config_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"p_max": 4, "colour": "blue"}"#).unwrap();
    for args in [
        vec!["verify", "--checks", "uct-classical,nope"],
        vec!["verify", "--rings", "bsu"],
        vec!["verify", "--pmax", "-1"],
        vec!["verify", "--jobs", "0"],
        vec!["verify", "--config", "/nonexistent/mrv.json"],
        vec!["verify", "--config", bad.to_str().unwrap()],
    ] {
        assert_eq!(mrv(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn config_file_and_env_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("mrv.json");
    std::fs::write(&cfg, r#"{"p_max": 2, "q_max": 1, "m_max": 3, "checks": ["uct-classical", "ker-t2"], "format": "json"}"#)
        .unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_mrv"))
        .args(["verify", "--mmax", "5"])
        .env("MRV_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["box"], serde_json::json!({"p_max": 2, "q_max": 1, "m_max": 5}));
}

#[test]
fn ring_filter_selects_checks() {
    let o = mrv(&["verify", "--rings", "chow", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let checks: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').next().unwrap().to_string()).collect();
    assert_eq!(checks, ["chow-slice", "two-torsion", "relation-images"]);
}

#[test]
fn markdown_and_text_reports_render() {
    let o = mrv(&["verify", "--checks", "uct-motivic", "--pmax", "4", "--qmax", "2", "--format", "md"]);
    assert_eq!(o.status.code(), Some(1));
    let md = stdout(&o);
    assert!(md.starts_with("# Verification report"));
    assert!(md.contains("| uct-motivic | fail |"));
    assert!(md.contains("| (0,1) |"));
    let o = mrv(&["verify", "--checks", "ker-t2", "--pmax", "4", "--qmax", "2"]);
    assert_eq!(stdout(&o), format!("{:<24} {:<6} 0 finding(s)\n", "ker-t2", "pass"));
}

fn catalog_without_2d3(dir: &Path) -> PathBuf {
    let o = mrv(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let mut cat: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rings = cat["rings"].as_array_mut().unwrap();
    rings.retain(|r| r["name"] == "chow");
    let rels = rings[0]["relations"].as_array_mut().unwrap();
    let before = rels.len();
    rels.retain(|r| r["label"] != "2d3");
    assert_eq!(rels.len(), before - 1);
    cat["maps"] = serde_json::json!([]);
    let path = dir.join("chow-mutant.json");
    std::fs::write(&path, serde_json::to_vec(&cat).unwrap()).unwrap();
    path
}

#[test]
fn mutation_removing_2d3_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let cat = catalog_without_2d3(dir.path());
    let o = mrv(&["--catalog", cat.to_str().unwrap(), "verify", "--checks", "chow-slice", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let first = &v[0]["findings"][0];
    assert_eq!(first["bidegree"], serde_json::json!([6, 3]));
    assert_eq!(first["witness"], serde_json::json!(["d3"]));
}

#[test]
fn catalog_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.json");
    assert_eq!(mrv(&["catalog", "--out", path.to_str().unwrap()]).status.code(), Some(0));
    let exported: mrv_core::context::Catalog = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(exported.rings.len(), 6);
    let o = mrv(&["--catalog", path.to_str().unwrap(), "piece", "--ring", "motivic-z2", "--deg", "4,2"]);
    assert_eq!(stdout(&o), "(Z/2)^2: {τ^-2·w2^2, y02}\n");
}

#[test]
fn malformed_catalog_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(&path, r#"{"rings": [{"name": "x"}], "maps": []}"#).unwrap();
    assert_eq!(mrv(&["--catalog", path.to_str().unwrap(), "checks"]).status.code(), Some(2));
}
