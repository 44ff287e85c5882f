use std::process::{Command, Output};

use univoque::trapezoid::Itinerary;
use univoque::PeriodicSeq;

fn univoque(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_univoque"))
        .args(args)
        .env_remove("UNIVOQUE_EPS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = univoque(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn table_csv_has_seven_rows() {
    let out = stdout(&["table", "8", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,d_beta_n,defining_poly,minimal_poly_if_divides,beta_n,below_KL");
    assert_eq!(lines.len(), 8);
    let values: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(4).unwrap()).collect();
    assert_eq!(values, ["1.61803", "1.83929", "1.75488", "1.81240", "1.78854", "1.80509", "1.78460"]);
    let below: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(5).unwrap()).collect();
    assert_eq!(below, ["yes", "no", "yes", "no", "no", "no", "yes"]);
}

#[test]
fn beta_n_five() {
    assert_eq!(stdout(&["beta-n", "5", "--eps", "1e-8"]).trim(), "1.81240");
}

#[test]
fn env_overrides_default_eps() {
    let out = Command::new(env!("CARGO_BIN_EXE_univoque"))
        .args(["beta-n", "5"])
        .env("UNIVOQUE_EPS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn periodic_below_golden_is_not_unique() {
    let out = stdout(&["check-unique", "--beta", "float:1.5", "--seq", "(01)^w"]);
    assert_eq!(out.trim(), "false");
}

#[test]
fn exit_codes() {
    assert_eq!(univoque(&["beta-n", "1"]).status.code(), Some(1));
    let out = univoque(&["check-unique", "--beta", "1.8", "--seq", "(110)^w", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("within 1 digits"));
    assert_eq!(univoque(&["expand", "--beta", "2.5"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "8", "--format", "json"][..],
        &["verify-order", "12", "--format", "csv"],
        &["lr-cycles", "--beta", "1.8", "--n", "2"],
        &["a-k", "16", "--format", "json"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn printed_sequences_reparse() {
    for k in ["2", "3", "6", "12", "24"] {
        let text = stdout(&["a-k", k]);
        let s: PeriodicSeq = text.trim().parse().unwrap();
        assert_eq!(s.to_string(), text.trim());
        assert_eq!(s.period_len().to_string(), k);
    }
    let out = stdout(&["lr-cycles", "--beta", "1.8", "--n", "2"]);
    let it = out.split_whitespace().next().unwrap();
    let parsed: Itinerary = it.parse().unwrap();
    assert_eq!(parsed.to_string(), it);
}

#[test]
fn a_k_methods_agree() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["a-k", "20", "--format", "json"])).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["recursive"], v["explicit"]);
}

#[test]
fn kl_brackets_known_value() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["kl", "--format", "json"])).unwrap();
    let (lo, hi) = (v["lo"].as_f64().unwrap(), v["hi"].as_f64().unwrap());
    assert!(lo < 1.787232 && 1.787231 < hi && hi - lo < 1e-7);
}

#[test]
fn extension_three_cycle() {
    let out = stdout(&["extension3", "--beta", "1.8", "--format", "csv"]);
    let row: Vec<f64> = out.lines().nth(1).unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert!(row[3] < row[0] && row[0] < row[4]);
}
