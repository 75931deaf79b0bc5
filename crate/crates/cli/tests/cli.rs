//! End-to-end checks of the binary: output formats, exit codes, and
//! byte-level determinism of repeated runs.

use std::process::{Command, Output};

fn spflag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spflag"))
        .args(args)
        .env_remove("SPFLAG_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn relations_text_round_trip() {
    let out = spflag(&["relations", "--n", "3", "--d", "2", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "+p[1,4] +p[2,5] +p[3,6]\n");
}

#[test]
fn relations_json_schema() {
    let out = spflag(&["relations", "--n", "3", "--d", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["zero_forms_dropped"], 0);
    assert_eq!(v["forms"].as_array().unwrap().len(), 6);
    assert_eq!(v["forms"][0]["terms"][0]["p"], serde_json::json!([1, 2, 5]));
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = spflag(&["verify", "thm44", "--q", "2", "--n", "2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lhs_count"], 15);
    assert_eq!(v["rhs_count"], 15);
    assert_eq!(v["equal"], true);
    assert_eq!(v["witnesses_of_failure"].as_array().unwrap().len(), 0);
}

#[test]
fn unverifiable_instance_exits_one() {
    // 20 degree-3 monomials cannot reach full rank on the 15 points that
    // exist at q = 2, and no larger modulus is offered
    let out = spflag(&[
        "verify",
        "smt-richardson",
        "--n",
        "2",
        "--d",
        "2",
        "--u",
        "4,3",
        "--v",
        "1,2",
        "--m",
        "3",
        "--qs",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "not-enough-points");
}

#[test]
fn usage_errors_exit_two() {
    // malformed coset: both labels carry the same hat at n = 3
    let out = spflag(&[
        "verify",
        "thm411",
        "--q",
        "2",
        "--n",
        "3",
        "--d",
        "2",
        "--u",
        "5,4",
        "--v",
        "1,4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // unknown flag
    let out = spflag(&["relations", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // d out of range
    let out = spflag(&["relations", "--n", "2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_refusal_exits_two_with_count() {
    let out = spflag(&[
        "verify", "thm44", "--q", "3", "--n", "6", "--d", "4", "--budget", "1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceeds the budget"), "{err}");
    assert!(err.contains("1000"), "{err}");
}

#[test]
fn budget_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_spflag"))
        .args(["enumerate", "--kind", "subspaces", "--n", "2", "--d", "2", "--q", "2"])
        .env("SPFLAG_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_flag_points_counts() {
    let out = spflag(&["enumerate", "--kind", "gp", "--n", "2", "--d", "2", "--q", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 15);
}

#[test]
fn ideal_quotient_generators() {
    let out = spflag(&[
        "ideal", "--n", "2", "--d", "2", "--u", "2,3", "--v", "1,4", "--format", "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "+p[1,2]\n+p[3,4]\n");
    let out = spflag(&[
        "ideal", "--n", "2", "--d", "2", "--u", "1,4", "--v", "2,3",
    ]);
    assert_eq!(out.status.code(), Some(2), "incomparable pair is rejected");
}

#[test]
fn membership_of_a_fixed_point() {
    let out = spflag(&[
        "membership",
        "--n",
        "2",
        "--d",
        "2",
        "--point",
        "[[1,0],[0,1],[0,0],[0,0]]",
        "--u",
        "4,3",
        "--v",
        "1,2",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["isotropic"], true);
    assert_eq!(v["richardson"], true);
}

#[test]
fn orders_chain_listing() {
    let out = spflag(&["orders", "--n", "2", "--d", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 4);
    // a 4-chain has 6 strict relations
    assert_eq!(v["le_pairs"].as_array().unwrap().len(), 6);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["verify", "thm44", "--q", "2", "--n", "2", "--d", "2"],
        vec!["verify", "lemma43", "--trials", "20", "--seed", "9"],
        vec!["sample", "--kind", "borel", "--n", "3", "--seed", "4"],
        vec![
            "sample", "--kind", "richardson", "--n", "2", "--d", "2", "--u", "4,3", "--v",
            "1,2", "--q", "101", "--seed", "5",
        ],
        vec!["enumerate", "--kind", "subspaces", "--n", "2", "--d", "2", "--q", "3"],
    ] {
        let a = spflag(&args);
        let b = spflag(&args);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
        assert!(a.status.success());
    }
}
