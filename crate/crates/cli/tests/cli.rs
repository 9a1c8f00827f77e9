use std::process::{Command, Output};

use serde_json::Value;

fn walkers(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkers"))
        .args(args)
        .env_remove("WALKS_CAP_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = walkers(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    walkers(args).status.code().unwrap()
}

#[test]
fn count_agrees_three_ways() {
    let v = json(&["count", "--n", "3", "--p", "2"]);
    assert_eq!(v["walks"], "5");
    assert_eq!(v["shapes"], "5");
    assert_eq!(v["bruteforce"], "5");
    assert_eq!(v["agree"], true);
    assert_eq!(json(&["count", "--n", "1", "--p", "1"])["walks"], "1");
}

#[test]
fn count_on_another_word() {
    let v = json(&["count", "--n", "2", "--p", "2", "--word", "LRLR"]);
    assert_eq!(v["walks"], "2");
    assert_eq!(v["agree"], true);
}

#[test]
fn verify_reports_both_sides() {
    for (n, p, z) in [("2", "2", "12"), ("1", "1", "2"), ("4", "2", "980")] {
        let v = json(&["verify", "--n", n, "--p", p]);
        assert_eq!(v["z_value"], z);
        assert_eq!(v["holds"], true);
    }
    let v = json(&["verify", "--n", "2", "--p", "2"]);
    assert_eq!((v["binom"].as_str(), v["f_value"].as_str()), (Some("6"), Some("2")));
}

#[test]
fn integral_kinds() {
    assert_eq!(json(&["integral", "--kind", "f", "--n", "4", "--p", "2"])["value"], 14);
    assert_eq!(json(&["integral", "--kind", "zsym", "--n", "3", "--p", "2"])["value"], 100);
    let v = json(&["integral", "--kind", "z", "--n", "3", "--start", "0,2,5", "--end", "1,2,4"]);
    assert_eq!(v["value"], 660);
    assert_eq!(code(&["integral", "--kind", "f", "--n", "3"]), 1);
}

#[test]
fn kernel_single_point_and_duplicates() {
    let v = json(&["kernel", "--points", "0"]);
    let rho = v["rho_k"].as_f64().unwrap();
    assert!((rho - 0.066_987_483_779_663_97).abs() < 1e-12);
    assert_eq!(json(&["kernel", "--points", "-1,-1"])["rho_k"].as_f64(), Some(0.0));
}

#[test]
fn kernel_matrix_is_symmetric() {
    let v = json(&["kernel", "--points", "-1.5,0.25"]);
    let m = &v["matrix"];
    assert_eq!(m[0][1], m[1][0]);
    let out = walkers(&["kernel", "--points", "0,1", "--curve", "-1,1,2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("x,rho1\n-1,"), "{text}");
}

#[test]
fn edge_is_deterministic() {
    let args = ["edge", "--sizes", "10,100,1000", "--trials", "300", "--seed", "42", "--format", "csv"];
    let a = walkers(&args);
    let b = walkers(&["--threads", "1"].iter().chain(&args).copied().collect::<Vec<_>>());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("n,trials,mean,std,mean_over_sqrt_n\n10,300,"));
    assert!(text.contains("# chi_hat="));
}

#[test]
fn edge_without_enough_sizes_still_reports() {
    let v = json(&["edge", "--sizes", "50", "--trials", "100", "--histogram"]);
    assert_eq!(v["fit"], Value::Null);
    let hist = v["sizes"][0]["histogram"].as_array().unwrap();
    let total: u64 = hist.iter().map(|r| r[1].as_u64().unwrap()).sum();
    assert_eq!(total, 100);
}

#[test]
fn simulate_keeps_walkers_apart() {
    let v = json(&["simulate", "--p", "4", "--steps", "200", "--seed", "3"]);
    let fin: Vec<i64> = serde_json::from_value(v["final"].clone()).unwrap();
    assert!(fin.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(v["moves"].as_array().unwrap().len(), 200);
    assert_eq!(json(&["simulate", "--seed", "3"]), json(&["simulate", "--seed", "3"]));
}

#[test]
fn bijection_dump_round_trips() {
    let v = json(&["bijection", "--n", "3", "--p", "2", "--word", "LRRLLR"]);
    assert_eq!(v["count"], 5);
    assert!(v["walks"].as_array().unwrap().iter().all(|w| w["round_trip"] == true));
    let v = json(&["bijection", "--permutation", "4,2,3,1", "--p", "3"]);
    assert_eq!(v["walks"][0]["pair"]["p_tableau"], serde_json::json!([[1, 3], [2], [4]]));
    assert_eq!(code(&["bijection", "--permutation", "3,2,1", "--p", "2"]), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["count", "--n", "2", "--p", "2"]), 0);
    assert_eq!(code(&["count", "--p", "2"]), 1);
    assert_eq!(code(&["count", "--n", "2", "--p", "2", "--word", "LXR"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["verify", "--n", "9", "--p", "2"]), 1);
    assert_eq!(code(&["kernel", "--points", "16"]), 1);
    assert_eq!(code(&["edge", "--sizes", "0"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn caps_can_be_lifted() {
    assert_eq!(code(&["count", "--n", "7", "--p", "2"]), 1);
    let out = walkers(&["--force", "count", "--n", "7", "--p", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let out = Command::new(env!("CARGO_BIN_EXE_walkers"))
        .args(["count", "--n", "7", "--p", "2", "--format", "csv"])
        .env("WALKS_CAP_OVERRIDE", "1")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().nth(1), Some("7,2,LLLLLLLRRRRRRR,429,429,429,true"));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("walkers-cli-test-{}.json", std::process::id()));
    let out = walkers(&["count", "--n", "2", "--p", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["walks"], "1");
}

#[test]
fn edge_default_sizes_show_the_scaling() {
    let v = json(&["edge", "--sizes", "100,1000,10000", "--trials", "2000", "--seed", "5"]);
    let ratios: Vec<f64> = v["sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["mean_over_sqrt_n"].as_f64().unwrap())
        .collect();
    assert!(ratios.windows(2).all(|w| w[0] < w[1] && w[1] < 2.0), "{ratios:?}");
    let chi = v["fit"]["chi_hat"].as_f64().unwrap();
    assert!((0.25..=0.41).contains(&chi), "{chi}");
}
