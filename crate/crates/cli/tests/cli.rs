use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satgenus")).args(args).env_remove("SATGENUS_CATALOG_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn alexander_of_catalog_trefoil() {
    let o = run(&["alexander", "trefoil"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "t^2 - t + 1");
}

#[test]
fn cable_then_alexander() {
    let dir = tempfile::tempdir().unwrap();
    let tre = dir.path().join("trefoil.json");
    let o = run(&["catalog", "show", "trefoil"]);
    std::fs::write(&tre, o.stdout).unwrap();
    let out = dir.path().join("c21.json");
    let o = run(&["cable", "-w", "2", "--companion", tre.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["alexander", out.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "t^4 - t^2 + 1");
}

#[test]
fn bounds_of_cable_satellite() {
    let o = run(&["bounds", "c21_trefoil"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("g4top in [1,1]"), "{}", stdout(&o));
    let o = run(&["bounds", "figure8"]);
    let s = stdout(&o);
    assert!(s.contains("g4top in [0,1]") && s.contains("gZ in [1,1]"), "{s}");
}

#[test]
fn satellite_with_certificate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sat.json");
    let o = run(&["satellite", "--pattern", "c2_5", "--companion", "trefoil", "--certificate", "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"trivial_block_size\": 2"));
    let o = run(&["bounds", out.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["gz"]["upper"], 3);
}

#[test]
fn signature_commands() {
    let o = run(&["signature", "trefoil", "--at", "-1"]);
    assert!(stdout(&o).contains("= -2"));
    let o = run(&["signature", "t2_5", "--profile", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["max_abs"], 4);
    let o = run(&["signature", "trefoil", "--at", "s=1/1"]);
    assert!(o.status.success());
}

#[test]
fn homology_command() {
    let o = run(&["homology", "trefoil", "-n", "3"]);
    assert!(stdout(&o).contains("(Z/2)^2"), "{}", stdout(&o));
}

#[test]
fn tables() {
    let o = run(&["table", "cable2q", "--p", "3:9", "--q", "1:9", "--json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 20);
    let o = run(&["table", "cable2q", "--p", "4:8"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["table", "iterated", "--p", "3", "--n", "2"]);
    assert!(stdout(&o).contains("23"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"name": "x", "components": 1, "seifert_matrix": [[1, 0], [0, 1], [0, 0]]}"#).unwrap();
    assert_eq!(run(&["alexander", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&bad, r#"{"name": "t", "components": 1, "seifert_matrix": [[-1, 1], [0, -1]], "trivial_block_size": 2}"#)
        .unwrap();
    let o = run(&["alexander", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotAlexanderTrivial"));
    assert_eq!(run(&["alexander", "no-such-knot"]).status.code(), Some(2));
    assert_eq!(run(&["signature", "trefoil", "--at", "s=0/1"]).status.code(), Some(2));
}

#[test]
fn json_is_deterministic() {
    let a = run(&["bounds", "c31_trefoil", "--json"]);
    let b = run(&["bounds", "c31_trefoil", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_satgenus"))
        .args(["bounds", "c31_trefoil", "--json"])
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn catalog_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("mine.json"),
        r#"{"name": "mine", "components": 1, "seifert_matrix": [[1, 1], [0, -1]]}"#,
    )
    .unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_satgenus"))
        .args(["catalog", "list"])
        .env("SATGENUS_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    let s = stdout(&o);
    assert!(s.contains("mine") && !s.contains("trefoil"), "{s}");
    assert!(Path::new(env!("CARGO_BIN_EXE_satgenus")).exists());
}

#[test]
fn verify_runner_filter() {
    let o = run(&["verify-paper", "--filter", "cable-table"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS"));
}
