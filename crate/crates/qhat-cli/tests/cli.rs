use std::process::{Command, Output};

fn qhat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhat")).args(args).env_remove("QHAT_FIXTURES").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ext_between_display_and_projective() {
    let o = qhat(&["ext", "D", "P", "--from", "0", "--to", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(1, 1, 0)");
}

#[test]
fn hom_between_projectives_follows_paths() {
    assert_eq!(stdout(&qhat(&["hom", "P2", "P3"])).trim(), "0");
    assert_eq!(stdout(&qhat(&["hom", "P3", "P1"])).trim(), "2");
}

#[test]
fn spherical_object_has_zero_class() {
    let o = qhat(&["k0", "E", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!([0, 0, 0]));
}

#[test]
fn module_file_operand() {
    let dir = std::env::temp_dir().join(format!("qhat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s2.json");
    std::fs::write(&path, r#"{"dims": [0, 1, 0], "maps": {}}"#).unwrap();
    let o = qhat(&["ext", "S2", "--file", path.to_str().unwrap(), "--from", "0", "--to", "2"]);
    std::fs::remove_dir_all(&dir).ok();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "(1, 0, 0)");
}

#[test]
fn serre_of_projective_is_injective() {
    let o = qhat(&["serre", "P3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let i3: serde_json::Value = serde_json::from_slice(&qhat(&["k0", "I3", "--json"]).stdout).unwrap();
    assert_eq!(v["homology"], serde_json::json!({"0": i3}));
    assert_eq!(v["k0"], i3);
}

#[test]
fn verify_single_check_exits_zero() {
    let o = qhat(&["verify", "--check", "spherical-object", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["passed"], 1);
}

#[test]
fn verify_unknown_check_fails() {
    let o = qhat(&["verify", "--check", "nonexistent"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown check"));
}

#[test]
fn verify_lists_checks() {
    let o = qhat(&["verify", "--list"]);
    assert_eq!(stdout(&o).lines().count(), 15);
}

#[test]
fn unknown_object_is_reported() {
    let o = qhat(&["k0", "Nope"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("Nope"));
}
