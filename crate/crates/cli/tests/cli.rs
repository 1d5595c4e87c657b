use std::process::{Command, Output};

use serde_json::Value;

fn hateful(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hateful")).args(args).env_remove("HATEFUL_NETWORK").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = hateful(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], args[0]);
    assert!(v["parameters"].is_object() && !v["result"].is_null());
    assert!(v.get("elapsed_ms").is_none());
    v
}

#[test]
fn every_subcommand_emits_json() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("english.txt");
    std::fs::write(&table, include_str!("../../core/data/tables/english.txt")).unwrap();
    let dump = dir.path().join("level.txt");
    let cases: Vec<Vec<&str>> = vec![
        vec!["beastly", "--count", "5"],
        vec!["lychrel", "89", "--iterates"],
        vec!["trajectory196", "--steps", "4"],
        vec!["angelini", "--count", "20", "--table", table.to_str().unwrap()],
        vec!["angelini", "--count", "1000", "--frequencies"],
        vec!["persistence", "39"],
        vec!["persistence", "--smallest", "4"],
        vec!["powertrain", "2592"],
        vec!["powertrain", "--fixed-points", "3000"],
        vec!["dup123", "--max-len", "7", "--dump-len", "5", "--dump-file", dump.to_str().unwrap()],
        vec!["gijswijt", "--count", "20"],
        vec!["curling", "2,3,2,3", "--extend"],
        vec!["best-tail", "6"],
        vec!["quet", "--count", "10"],
        vec!["quet", "--small-indices", "400"],
        vec!["tsp", "--n", "5", "--trials", "50", "--rng-seed", "1"],
        vec!["lagarias", "--count", "12"],
        vec!["lagarias", "--check", "300"],
        vec!["verify", "A090822", "--count", "33"],
    ];
    for args in &cases {
        json(args);
    }
    assert_eq!(std::fs::read_to_string(&dump).unwrap().lines().count(), 8);
}

#[test]
fn results_are_exact() {
    let v = json(&["gijswijt", "--count", "9"]);
    assert_eq!(v["result"]["terms"], serde_json::json!([1, 1, 2, 1, 1, 2, 2, 2, 3]));
    let v = json(&["powertrain", "24547284284866560000000000"]);
    assert_eq!(v["result"]["value"].to_string(), "24547284284866560000000000");
    let v = json(&["lychrel", "196", "--cap", "5"]);
    assert_eq!(v["result"]["status"], "CapReached");
    assert_eq!(v["result"]["palindrome"], -1);
    let v = json(&["best-tail", "6"]);
    assert_eq!(v["result"]["witness"], "222322");
    let v = json(&["tsp", "--n", "3", "--trials", "10", "--rng-seed", "3"]);
    for k in ["n", "trials", "seed", "mean_eels", "std_error_eels", "mean_absolute"] {
        assert!(v["result"].get(k).is_some(), "{k}");
    }
}

#[test]
fn text_output_is_one_term_per_line() {
    let out = hateful(&["gijswijt", "--count", "9"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1\n1\n2\n1\n1\n2\n2\n2\n3\n");
    let out = hateful(&["trajectory196", "--steps", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "196\n887\n1675\n");
}

#[test]
fn same_argv_same_bytes() {
    for args in [
        &["--format", "json", "tsp", "--n", "5", "--trials", "200", "--rng-seed", "9"][..],
        &["--format", "json", "dup123", "--max-len", "9"][..],
        &["quet", "--count", "500"][..],
    ] {
        let (a, b) = (hateful(args), hateful(args));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let one = hateful(&["--threads", "1", "--format", "json", "best-tail", "10"]);
    let four = hateful(&["--threads", "4", "--format", "json", "best-tail", "10"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn exit_codes() {
    let out = hateful(&["verify", "A003001", "--count", "8"]);
    assert_eq!(out.status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("b003001.txt");
    std::fs::write(&bad, "1 10\n2 25\n3 40\n4 77\n").unwrap();
    let out = hateful(&["verify", "A003001", "--count", "4", "--fixture", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.starts_with("error[mismatch]:"), "{stderr}");
    assert!(String::from_utf8(out.stdout).unwrap().contains("first_mismatch 3 40 39"));

    for args in [
        &["gijswijt", "--count", "3", "--frobnicate"][..],
        &["quet"][..],
        &["persistence", "7", "--smallest", "2"][..],
        &["curling", "2x3"][..],
        &["verify", "B000001", "--count", "3"][..],
        &["verify", "A000045", "--count", "3"][..],
        &["--threads", "0", "gijswijt", "--count", "3"][..],
    ] {
        let out = hateful(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert_eq!(stderr.lines().count(), 1, "{args:?}: {stderr}");
        assert!(stderr.starts_with("error[usage]:"));
    }

    for args in [
        &["powertrain", "99999999999", "--max-digits", "20"][..],
        &["lagarias", "--count", "50", "--max-bits", "4"][..],
        &["curling", "2", "--extend", "--step-cap", "0"][..],
    ] {
        let out = hateful(args);
        assert_eq!(out.status.code(), Some(3), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
        assert!(String::from_utf8(out.stderr).unwrap().starts_with("error[runtime]:"));
    }

    let empty = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hateful"))
        .args(["verify", "A003001", "--count", "3", "--fetch"])
        .env("HATEFUL_CACHE_DIR", empty.path())
        .env("HATEFUL_OFFLINE", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn timing_is_opt_in() {
    let out = hateful(&["--format", "json", "--timing", "gijswijt", "--count", "3"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["elapsed_ms"].is_number());
}
