use equilib::cli_io::write_off;
use equilib::geom_core::convex_hull;
use equilib::geom_core::solids::{regular_tetrahedron, unit_cube};
use equilib::Vec3;
use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn equilib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equilib")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn cube_file(dir: &Path) -> String {
    let path = dir.join("cube.off");
    write_off(&unit_cube(), &path).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_cube() {
    let dir = tempfile::tempdir().unwrap();
    let out = equilib(&["analyze", &cube_file(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["equilibria"]["stable"], 6);
    assert_eq!(doc["equilibria"]["saddle"], 12);
    assert_eq!(doc["equilibria"]["unstable"], 8);
    assert_eq!(doc["schema_version"], 1);
    assert!(doc["metrics"]["hausdorff_to_ball"].is_null());
    assert!(doc.get("roll_traces").is_none());
}

#[test]
fn analyze_degenerate_reference_exits_two() {
    // obtuse-corner prism; the reference sits above the corner edge
    let dir = tempfile::tempdir().unwrap();
    let mut pts = Vec::new();
    for z in [0.0, 1.0] {
        for (x, y) in [(0.0, 0.0), (3.0, 0.0), (-1.0, 1.0)] {
            pts.push(Vec3::new(x, y, z));
        }
    }
    let path = dir.path().join("prism.off");
    write_off(&convex_hull(&pts).unwrap(), &path).unwrap();
    let out = equilib(&["analyze", path.to_str().unwrap(), "--ref", "0,0.2,0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["equilibria"]["any_degenerate"], true);
}

#[test]
fn analyze_bad_reference_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let cube = cube_file(dir.path());
    assert_eq!(equilib(&["analyze", &cube, "--ref", "5,5,5"]).status.code(), Some(64));
    assert_eq!(equilib(&["analyze", &cube, "--ref", "1,2"]).status.code(), Some(64));
    assert_eq!(equilib(&["analyze", "/nonexistent/mesh.off"]).status.code(), Some(66));
    let junk = dir.path().join("junk.off");
    std::fs::write(&junk, "OFF\n3 1 0\n").unwrap();
    let out = equilib(&["analyze", junk.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(66));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
}

#[test]
fn usage_errors() {
    assert_eq!(equilib(&[]).status.code(), Some(64));
    assert_eq!(equilib(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(equilib(&["generate", "--n", "3"]).status.code(), Some(64));
    assert_eq!(equilib(&["--help"]).status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.off");
    let o = equilib(&["generate", "--n", "4", "--eps", "2.0", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn chain_single_step() {
    let out = equilib(&["chain", "--beta", "1.0472", "--target", "0.4", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let radii: Vec<f64> = doc["radii"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    assert_eq!(radii.len(), 2);
    assert!((radii[0] - 1.0).abs() < 1e-15);
    assert!((radii[1] - 0.4).abs() < 1e-15);
    assert_eq!(doc["points"].as_array().unwrap().len(), 2);
    let bad = equilib(&["chain", "--beta", "1.5707963", "--target", "0.95", "--k", "1"]);
    assert_eq!(bad.status.code(), Some(64));
}

#[test]
fn generate_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let mesh = dir.path().join("p5.off");
    let m = mesh.to_str().unwrap();
    let out = equilib(&["generate", "--n", "5", "--eps", "0.25", "--out", m]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    assert_eq!(doc["success"], true);
    assert_eq!(doc["equilibria"]["stable"], 1);
    assert!(doc["hausdorff"].as_f64().unwrap() < 0.25);
    let v = equilib(&["verify-monostable", m]);
    assert_eq!(v.status.code(), Some(0));
    let verdict = json(&v);
    assert_eq!(verdict["monostable"], true);
    assert_eq!(verdict["stable_faces"].as_array().unwrap().len(), 1);
    let metrics = equilib(&["metrics", m, "--order", "5"]);
    assert_eq!(metrics.status.code(), Some(0));
    let md = json(&metrics);
    assert!(md["metrics"]["symmetry_residual"].as_f64().unwrap() < 1e-9);
    assert!(md["metrics"]["ratio"].as_f64().unwrap() >= 1.0 / std::f64::consts::PI - 1e-6);
}

#[test]
fn generation_failure_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let mesh = dir.path().join("fail.off");
    let m = mesh.to_str().unwrap();
    let out = equilib(&["generate", "--n", "3", "--eps", "0.25", "--s", "3", "--k", "8", "--max-attempts", "1", "--out", m]);
    assert_eq!(out.status.code(), Some(3));
    let doc = json(&out);
    assert_eq!(doc["success"], false);
    assert_eq!(doc["attempts"].as_array().unwrap().len(), 1);
    assert!(!mesh.exists());
}

#[test]
fn verify_rejects_platonic_bodies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tet.off");
    write_off(&regular_tetrahedron(), &path).unwrap();
    let out = equilib(&["verify-monostable", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["monostable"], false);
    assert_eq!(equilib(&["verify-monostable", &cube_file(dir.path())]).status.code(), Some(1));
}

#[test]
fn thread_cap_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cube = cube_file(dir.path());
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_equilib")).args(["analyze", &cube]).env("EQUILIB_THREADS", v).output().unwrap()
    };
    let one = run("1");
    let auto = run("0");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, auto.stdout);
    assert_eq!(run("lots").status.code(), Some(64));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cube = cube_file(dir.path());
    let a = equilib(&["analyze", &cube, "--roll"]);
    let b = equilib(&["analyze", &cube, "--roll"]);
    assert_eq!(a.stdout, b.stdout);
}
