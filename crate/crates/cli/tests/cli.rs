//! End-to-end runs of the `polyrank` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use polyrank_core::complexes::presets::preset;
use polyrank_core::linkgraph::named;
use serde_json::Value;

fn polyrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyrank"))
        .args(args)
        .env_remove("POLYRANK_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = polyrank(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("polyrank-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn ball_of_radius_zero() {
    let v = json(&["ball", "--radius", "0"]);
    assert_eq!(v, serde_json::json!({"vertices": 1, "edges": 0, "triangles": 0}));
    let v = json(&["ball", "--preset", "V0", "--radius", "2", "--stats"]);
    assert_eq!(v["sphere_sizes"], serde_json::json!([1, 16, 144]));
}

#[test]
fn link_spectrum_of_l74() {
    let v = json(&["link", "--spectrum"]);
    assert!((v["lambda1"].as_f64().unwrap() - (1.0 - 1.0 / 3f64.sqrt())).abs() < 1e-9);
    let mults: Vec<u64> = v["eigenvalues"].as_array().unwrap().iter().map(|e| e["multiplicity"].as_u64().unwrap()).collect();
    assert_eq!(mults, vec![1, 4, 3, 3, 4, 1]);
}

#[test]
fn link_from_a_graph_file() {
    let path = scratch("l74.txt", &named::l74().to_adjacency_text());
    let v = json(&["link", "--graph", path.to_str().unwrap(), "--girth", "--aut"]);
    assert_eq!(v["girth"], 6);
    assert_eq!(v["ample"], true);
    assert_eq!(v["aut_order"], 96);
    assert!(v.get("lambda1").is_none());
    let heawood = scratch("heawood.txt", &named::heawood().to_adjacency_text());
    let v = json(&["link", "--graph", heawood.to_str().unwrap()]);
    assert_eq!(v["ample"], true);
    assert_eq!(v["aut_order"], 336);
    assert!((v["lambda1"].as_f64().unwrap() - (1.0 - 2f64.sqrt() / 3.0)).abs() < 1e-9);
}

#[test]
fn link_of_every_preset_is_l74() {
    let pairs = |v: &Value| -> Vec<(f64, u64)> {
        v["eigenvalues"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e["value"].as_f64().unwrap(), e["multiplicity"].as_u64().unwrap()))
            .collect()
    };
    let reference = pairs(&json(&["spectrum"]));
    for name in ["V0", "V3", "Vbar"] {
        let got = pairs(&json(&["spectrum", "--preset", name]));
        assert_eq!(got.len(), reference.len(), "{name}");
        for ((x, m), (y, n)) in got.iter().zip(&reference) {
            assert!((x - y).abs() < 1e-9 && m == n, "{name}");
        }
    }
}

#[test]
fn homology_from_file_and_preset() {
    let path = scratch("v0.json", &preset("V0").unwrap().presentation().to_json());
    assert_eq!(json(&["homology", "--presentation", path.to_str().unwrap()]), serde_json::json!({"free_rank": 0, "torsion": [15]}));
    assert_eq!(json(&["homology", "--preset", "V0_1"]), serde_json::json!({"free_rank": 2, "torsion": [3]}));
    assert_eq!(json(&["abelianize", "--gens", "2", "--rel", "a^3", "--rel", "ab=ba"]), serde_json::json!({"free_rank": 1, "torsion": [3]}));
    assert_eq!(json(&["abelianize", "--gens", "3"]), serde_json::json!({"free_rank": 3, "torsion": []}));
}

#[test]
fn classification_output() {
    let v = json(&["classify"]);
    let classes = v.as_array().unwrap();
    assert!(classes.iter().all(|c| c["link_ok"] == true && c["orientable"] == true));
    let published: Vec<&str> = classes.iter().filter_map(|c| c["published"].as_str()).collect();
    assert_eq!(published.len(), 12);
    for c in classes {
        assert!(c["h1"]["free_rank"].is_u64());
        assert_eq!(c["canonical_faces"].as_array().unwrap().len(), 8);
    }
}

#[test]
fn tracing_and_rings() {
    assert_eq!(json(&["trace", "--word", "6 1 -5 -1"])["trivial"], true);
    assert_eq!(json(&["trace", "--word", "1 5 -1 -5"])["trivial"], false);
    let r = json(&["rings", "--preset", "Vbar"]);
    assert_eq!(r, serde_json::json!([{"letters": [1, -6, -5, -3, 7, -2, -8, -4], "length": 8}]));
}

#[test]
fn strips_and_probe() {
    let v = json(&["strips", "--boundary", "6", "--height", "1"]);
    assert_eq!(v["count"], 3);
    assert!(v["strips"].as_array().unwrap().iter().all(|s| s["period"] == 1 && s["top"] == serde_json::json!([5])));
    let v = json(&["probe", "--preset", "V0_2", "--word", "3 4", "--word", "5 6 7 2 3 4"]);
    assert_eq!(v, serde_json::json!({"distinct": 30, "total": 30, "free": true}));
    let v = json(&["probe", "--preset", "V0_2", "--word", "1 1 1", "--word", "3 4", "--length", "2"]);
    assert_eq!(v["free"], false);
}

#[test]
fn profile_csv_is_plot_ready() {
    let out = polyrank(&["profile", "--max-r", "2.1", "--margin", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,r,supports,count");
    assert_eq!(lines[1], "1,0.288675,24,0");
    assert_eq!(lines.last().unwrap(), &"7,2.020726,1176,96");
}

#[test]
fn meso_check_shape() {
    let v = json(&["meso-check", "--k", "8..9"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for row in rows {
        for key in ["k", "mu", "bound", "constructed", "pass"] {
            assert!(row.get(key).is_some(), "{key}");
        }
        assert_eq!(row["mu"], 2);
    }
}

#[test]
fn output_is_deterministic_across_threads() {
    let a = polyrank(&["profile", "--max-r", "2.1", "--threads", "1"]);
    let b = polyrank(&["profile", "--max-r", "2.1", "--threads", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let a = polyrank(&["report", "--k", "8", "--threads", "1"]);
    let b = polyrank(&["report", "--k", "8", "--threads", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_embeds_version_and_hash() {
    let v = json(&["report", "--k", "8"]);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    let hash = v["config_hash"].as_str().unwrap();
    assert_eq!(hash.len(), 64);
    let t = &v["tables"];
    assert_eq!(t["presets"].as_array().unwrap().len(), 13);
    assert!(t["presets"].as_array().unwrap().iter().all(|p| p["euler_characteristic"] == 1));
    assert_eq!(t["rings"].as_array().unwrap().len(), 13);
    assert_eq!(t["meso"].as_array().unwrap().len(), 1);
    let other = json(&["report", "--k", "9"]);
    assert_ne!(other["config_hash"], v["config_hash"]);
    let budget = json(&["report", "--k", "8", "--budget", "5000000"]);
    assert_ne!(budget["config_hash"], v["config_hash"]);
}

#[test]
fn exit_codes() {
    assert_eq!(polyrank(&["ball", "--preset", "nope", "--radius", "1"]).status.code(), Some(1));
    assert_eq!(polyrank(&["homology", "--presentation", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(polyrank(&["bogus"]).status.code(), Some(1));
    assert_eq!(polyrank(&["trace", "--word", "9"]).status.code(), Some(1));
    let bad = scratch("bad.json", r#"{"faces": [[1,2,3]]}"#);
    assert_eq!(polyrank(&["homology", "--presentation", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(polyrank(&["ball", "--radius", "4", "--budget", "100"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_polyrank"))
        .args(["ball", "--radius", "3"])
        .env("POLYRANK_BUDGET", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    assert!(out.stdout.is_empty());
    assert_eq!(polyrank(&["--version"]).status.code(), Some(0));
}
