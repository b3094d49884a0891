use std::process::{Command, Output};

fn skeletal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skeletal")).args(args).output().expect("run skeletal")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_filters_by_kind() {
    let o = skeletal(&["list", "--kind", "finite-regular"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("18 entries\n"));
    let o = skeletal(&["list", "--kind", "pure-apeirohedron"]);
    assert!(stdout(&o).ends_with("12 entries\n"));
    let o = skeletal(&["list"]);
    assert!(stdout(&o).ends_with("79 entries\n"));
}

#[test]
fn verify_reports_matches() {
    let o = skeletal(&["verify", "K6(1,2)", "--window", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.trim_start().starts_with("r ")).unwrap();
    assert!(line.contains("expected 8") && line.ends_with("ok"), "{line}");

    let o = skeletal(&["verify", "skeleton-{4,3,4}", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let f = v["fields"].as_array().unwrap().iter().find(|f| f["field"] == "flag_stabilizer_order").unwrap();
    assert_eq!(f["computed"], 2);
    assert_eq!(f["match"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(skeletal(&["verify", "no-such-entry"]).status.code(), Some(2));
    assert_eq!(skeletal(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(skeletal(&["build", "cube", "--window", "abc"]).status.code(), Some(2));
    // infinite faces cannot be written as OFF without truncation
    assert_eq!(skeletal(&["export", "{inf,3}^(b)"]).status.code(), Some(2));
    assert_eq!(skeletal(&["export", "{inf,3}^(b)", "--truncate"]).status.code(), Some(0));
}

#[test]
fn export_and_classify_round_trip() {
    let o = skeletal(&["export", "cube"]);
    let off = stdout(&o);
    let mut lines = off.lines();
    assert_eq!(lines.next(), Some("OFF"));
    assert_eq!(lines.next(), Some("8 6 12"));

    let path = std::env::temp_dir().join(format!("skeletal-cli-cube-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    assert!(skeletal(&["export", "cube", "--format", "json", "--out", p]).status.success());
    let o = skeletal(&["classify", p]);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success());
    let rec: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rec["schlafli"], "{4,3}");
    assert_eq!(rec["flag_orbits"], 1);
}

#[test]
fn family_parameters() {
    let o = skeletal(&["build", "Q(c,d)", "--params", "0,1"]);
    assert!(o.status.success());
    assert_eq!(skeletal(&["build", "Q(c,d)", "--params", "0,0"]).status.code(), Some(2));
    assert_eq!(skeletal(&["build", "Q(c,d)", "--params", "1"]).status.code(), Some(2));
    for (id, params) in [("P(a,b)", "2,-1"), ("Q(c,d)", "0,1"), ("P1(a,b)", "1,1")] {
        let o = skeletal(&["verify", id, "--params", params]);
        assert_eq!(o.status.code(), Some(0), "{id} at {params}: {}", stdout(&o));
    }
}

#[test]
fn verify_all_by_kind() {
    let o = skeletal(&["verify-all", "--kind", "rank4-skeleton", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("4/4 entries verified\n"));
}
