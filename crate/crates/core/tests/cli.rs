use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn g2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2")).args(args).env_remove("G2_LMAX").output().expect("spawn g2")
}

fn json_of(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::File::create(&p).unwrap().write_all(body.as_bytes()).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn tensor_square_of_seven() {
    let v = json_of(&g2(&["tensor", "--left", "0,1", "--right", "(0,1)"]));
    let got: Vec<(i64, i64, u64)> = v["summands"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| (s["weight"][0].as_i64().unwrap(), s["weight"][1].as_i64().unwrap(), s["dim"].as_u64().unwrap()))
        .collect();
    let mut dims: Vec<u64> = got.iter().map(|g| g.2).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 7, 14, 27]);
    assert!(got.iter().all(|s| [(0, 0), (0, 1), (1, 0), (0, 2)].contains(&(s.0, s.1))));
}

#[test]
fn invdim_of_three_sevens() {
    let v = json_of(&g2(&["invdim", "--weights", "0,1;0,1;0,1"]));
    assert_eq!(v["invariant_dim"], 1);
}

#[test]
fn bae_closed_form_and_verify() {
    let v = json_of(&g2(&["bae", "--lambda", "1,1", "--case", "1"]));
    assert_eq!(v["solution"]["y2"]["render"], "x - 1/2");
    let v = json_of(&g2(&["bae-verify", "--lambda", "2,1", "--case", "3"]));
    assert_eq!(v["ok"], true);
}

#[test]
fn chain_matches_closed_form() {
    let v = json_of(&g2(&["reproduce", "--lambda", "1,1", "--case", "2"]));
    assert_eq!(v["matches_closed_form"], true);
}

#[test]
fn kernel_round_trips_through_ssd_check() {
    let dir = tempfile::tempdir().unwrap();
    let k = g2(&["kernel", "--lambda", "0,1", "--case", "0"]);
    assert!(k.status.success());
    let space = write_temp(&dir, "space.json", &String::from_utf8(k.stdout).unwrap());
    let ram = write_temp(&dir, "ram.json", r#"{"points": ["0", "1"], "partitions": [[0, 1], [0, 1]]}"#);
    let v = json_of(&g2(&["ssd-check", "--space", &space, "--ram", &ram]));
    assert_eq!(v["self_dual"], true);
    assert_eq!(v["witness_found"], true);
    let w = json_of(&g2(&["wronski", "--space", &space]));
    assert_eq!(w["reduced"]["render"], "x^2 - x");

    // the standard space is not self-dual for this ramification
    let std_space = write_temp(&dir, "std.json", "[[1],[0,1],[0,0,1],[0,0,0,1],[0,0,0,0,1],[0,0,0,0,0,1],[0,0,0,0,0,0,1]]");
    let o = g2(&["ssd-check", "--space", &std_space, "--ram", &ram]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exponents_and_h2() {
    let v = json_of(&g2(&["exponents", "--lambda", "0,1", "--case", "0", "--at", "0", "--conjugated"]));
    assert_eq!(v["exponents"], serde_json::json!([-1, 0, 2, 3, 4, 6, 7]));
    let v = json_of(&g2(&["h2check", "--lambda", "1,0", "--case", "0"]));
    assert_eq!(v["residue_side"], v["eigenvalue_side"]);
}

#[test]
fn strata_d7_has_one_node() {
    let v = json_of(&g2(&["strata", "--d", "7", "--format", "json"]));
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
    assert_eq!(v["nodes"][0]["label"], "()");
}

#[test]
fn strata_d11_dot_is_byte_stable() {
    let o = g2(&["strata", "--d", "11", "--format", "dot"]);
    assert!(o.status.success());
    let golden = include_str!("golden/strata_d11.dot");
    assert_eq!(String::from_utf8(o.stdout).unwrap(), golden);
}

#[test]
fn exit_codes() {
    assert_eq!(g2(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(g2(&["strata", "--d", "11", "--format", "svg"]).status.code(), Some(2));
    assert_eq!(g2(&["bae", "--lambda", "0,1", "--case", "9"]).status.code(), Some(2));
    assert_eq!(g2(&["bae", "--lambda", "0,1", "--case", "2"]).status.code(), Some(1));
    assert_eq!(g2(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_single_suite() {
    let o = g2(&["verify", "--suite", "strata"]);
    assert!(o.status.success());
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.starts_with("criterion 7 (strata): PASS"), "{out}");
}
