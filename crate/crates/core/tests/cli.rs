use std::process::{Command, Output};

fn heptacore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heptacore"))
        .args(args)
        .env_remove("HEPTACORE_ORDER")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_single_identity() {
    let o = heptacore(&["verify", "eq-1.22", "--order", "150"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/1 identities pass"));
}

#[test]
fn verify_unknown_identity_is_usage_error() {
    let o = heptacore(&["verify", "eq-99.1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
}

#[test]
fn verify_all_jsonlike() {
    let o = heptacore(&["verify", "--all", "--order", "60", "--format", "jsonlike"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut ids = Vec::new();
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass");
        assert!(v["order"].as_u64().unwrap() <= 60);
        assert!(v.get("paper_ref").is_some() && v.get("millis").is_some());
        ids.push(v["id"].as_str().unwrap().to_string());
    }
    assert!(ids.contains(&"eq-1.18".to_string()));
    let mut sorted = ids.clone();
    sorted.sort_by(|a, b| heptacore::identities::id_order(a, b));
    assert_eq!(ids, sorted);
}

#[test]
fn oracle_rows_identical() {
    let o = heptacore(&["oracle", "--max", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("30/30 rows identical"));
    assert_eq!(heptacore(&["oracle", "--max", "46"]).status.code(), Some(2));
}

#[test]
fn tables() {
    let o = heptacore(&["table", "a7", "--max", "7", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("n,a7"));
    assert_eq!(out.lines().last(), Some("7,8"));

    let out = stdout(&heptacore(&["table", "a7j", "--max", "6", "--csv"]));
    assert_eq!(out.lines().next(), Some("n,a7,a7_m1,a7_0,a7_1,a7_2"));
    assert_eq!(out.lines().last(), Some("6,11,0,10,0,1"));
}

#[test]
fn coeffs_range_and_env_default() {
    let o = heptacore(&[
        "coeffs", "psi(q)", "--order", "10", "--from", "5", "--to", "6",
    ]);
    assert_eq!(stdout(&o), "5 0\n6 1\n");

    let env = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_heptacore"))
            .args(args)
            .env("HEPTACORE_ORDER", "4")
            .output()
            .unwrap()
    };
    assert_eq!(stdout(&env(&["coeffs", "q"])).lines().count(), 5);
    assert_eq!(
        stdout(&env(&["coeffs", "q", "--order", "2"]))
            .lines()
            .count(),
        3
    );
}

#[test]
fn scans_exit_codes() {
    let o = heptacore(&["scan", "--theorems", "--order", "400"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("VIOLATED"));
    assert_eq!(
        heptacore(&["scan", "conj-6.4", "--order", "300"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(heptacore(&["scan", "no-such-claim"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    for args in [
        &["bogus"][..],
        &["coeffs"],
        &["coeffs", "E(q^7"],
        &["coeffs", "1/(1-1)"],
        &["table", "a8", "--max", "3"],
    ] {
        let o = heptacore(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(
            String::from_utf8_lossy(&o.stderr).lines().count(),
            1,
            "{args:?}"
        );
    }
    assert_eq!(heptacore(&["--help"]).status.code(), Some(0));
    assert_eq!(heptacore(&["--version"]).status.code(), Some(0));
}
