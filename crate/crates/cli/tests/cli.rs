//! End-to-end tests against the compiled binary: golden outputs, exit
//! codes, file output, and the JSON round-trip guarantee.

use std::process::{Command, Output};

fn nsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn construct_json_golden() {
    let out = nsg(&["construct", "--family", "s", "--e", "4", "--q", "1", "--d", "1", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"family\":\"s\",\"e\":4,\"q\":1,\"d\":1,\"m\":7,\"generators\":[7,8,17,18],\
         \"frobenius_closed\":27,\"frobenius_computed\":27,\"genus\":14,\"symmetric\":true,\
         \"mu\":5,\"mu_predicted\":5,\"checks\":{\"minimality\":true,\"apery_match\":true,\
         \"frobenius_match\":true,\"symmetry\":true,\"mu_match\":true,\
         \"unique_expression\":true,\"notsum\":true}}\n"
    );
}

#[test]
fn construct_family_t_table() {
    let out = nsg(&["construct", "--family", "t", "--e", "4", "--q", "2", "--d", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("generators: 8, 9, 22, 23"));
    assert!(text.contains("frobenius_computed: 37"));
    assert!(text.contains("mu: 5"));
}

#[test]
fn construct_rejects_small_e_with_exit_2() {
    let out = nsg(&["construct", "--family", "s", "--e", "3", "--q", "1", "--d", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("e must be >= 4"));
}

#[test]
fn construct_json_round_trips() {
    let out = nsg(&["construct", "--family", "t", "--e", "6", "--q", "2", "--d", "1", "--format", "json"]);
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    // field order is fixed, so re-serializing the typed report is identity;
    // here we check the envelope and key facts survive a parse
    assert_eq!(value["family"], "t");
    assert_eq!(value["generators"], serde_json::json!([10, 11, 26, 27, 28, 29]));
    assert_eq!(value["frobenius_closed"], 45);
    assert!(text.ends_with('\n'));
}

#[test]
fn verify_acceptance_style_sweep_exits_zero() {
    let out = nsg(&["verify", "--family", "both", "--e", "4..8", "--q", "1..5", "--d", "1..9", "--format", "json"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["summary"]["failures"], 0);
    let total = value["summary"]["instances"].as_u64().unwrap()
        + value["summary"]["skipped"].as_u64().unwrap();
    assert_eq!(total, 5 * 5 * 9 * 2);
    assert_eq!(
        value["reports"].as_array().unwrap().len() as u64,
        value["summary"]["instances"].as_u64().unwrap()
    );
}

#[test]
fn verify_counts_gcd_skip() {
    let out = nsg(&["verify", "--family", "s", "--e", "4..4", "--q", "1..1", "--d", "7..7", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["summary"]["instances"], 0);
    assert_eq!(value["summary"]["skipped"], 1);
    assert!(stderr(&out).is_empty());
}

#[test]
fn verify_counts_odd_e_skip_for_family_t() {
    let out = nsg(&["verify", "--family", "t", "--e", "5..5", "--q", "2..2", "--d", "1..1"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("skipped=1"));
    assert!(stderr(&out).contains("e must be even"));
}

#[test]
fn verify_respects_jobs_flag_and_env() {
    let out = nsg(&["verify", "--family", "s", "--e", "4..5", "--q", "1..2", "--d", "1..2", "--jobs", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("family,e,q,d,m,generators,"));

    let out = Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(["verify", "--family", "s", "--e", "4..4", "--q", "1..1", "--d", "1..1"])
        .env("NSG_JOBS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn presentation_of_two_generators() {
    let out = nsg(&["presentation", "--gens", "2,3", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"generators\":[2,3],\"betti_elements\":[{\"element\":6,\"components\":2}],\
         \"relations\":[{\"element\":6,\"lhs\":[3,0],\"rhs\":[0,2]}],\"mu\":1}\n"
    );
}

#[test]
fn presentation_mu_of_family_instance() {
    let out = nsg(&["presentation", "--gens", "7,8,17,18", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["mu"], 5);
}

#[test]
fn presentation_rejects_non_coprime_with_exit_2() {
    let out = nsg(&["presentation", "--gens", "4,6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("gcd"));
}

#[test]
fn apery_from_gens_and_from_family_agree() {
    let a = nsg(&["apery", "--gens", "7,8,17,18", "--format", "json"]);
    let b = nsg(&["apery", "--family", "s", "--e", "4", "--q", "1", "--d", "1", "--format", "json"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(
        stdout(&a),
        "{\"generators\":[7,8,17,18],\"base\":7,\"elements\":[0,8,16,17,18,26,34]}\n"
    );
}

#[test]
fn apery_rejects_non_member_base() {
    let out = nsg(&["apery", "--gens", "7,8,17,18", "--base", "27"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not a nonzero element"));
}

#[test]
fn gaps_golden() {
    let out = nsg(&["gaps", "--gens", "3,5,7", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"generators\":[3,5,7],\"frobenius\":4,\"genus\":3,\"gaps\":[1,2,4]}\n"
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("nsg-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = nsg(&[
        "construct", "--family", "s", "--e", "4", "--q", "1", "--d", "1",
        "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("{\"family\":\"s\""));
    assert!(text.ends_with('\n'));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_usage_exits_2() {
    let out = nsg(&["verify", "--family", "s", "--e", "8..4", "--q", "1", "--d", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = nsg(&["construct", "--family", "x", "--e", "4", "--q", "1", "--d", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
