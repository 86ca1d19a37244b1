use std::process::Command;

use serde_json::Value;

fn affstr(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_affstr"))
        .args(args)
        .env("AFFSTR_THREADS", "2")
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn roots_json() {
    let (code, out) = affstr(&["roots", "--n", "2", "--orientation", "all", "--k-max", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "roots");
    assert_eq!(v["failed_checks"], 0);
    assert_eq!(v["orientations"].as_array().unwrap().len(), 4);
    assert!(v.get("elapsed").is_none());
    let roots = &v["orientations"][0]["checks"][1]["data"]["roots"];
    assert_eq!(roots.as_array().unwrap().len(), 13);
}

#[test]
fn json_is_reproducible() {
    let args = ["strings", "--n", "3", "--orientation", "LRL", "--k-max", "1", "--format", "json"];
    assert_eq!(affstr(&args).1, affstr(&args).1);
}

#[test]
fn strings_text_reports_the_reference_table() {
    let (code, out) = affstr(&["strings", "--n", "5", "--orientation", "LRRRL", "--k-max", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS golden_example"));
    assert!(out.contains("reference typo p1"));
    assert!(out.lines().last().unwrap().contains("0 failed"));
}

#[test]
fn bracket_of_adjacent_simples() {
    let (code, out) = affstr(&[
        "bracket", "--n", "2", "--orientation", "LR", "--f", "theta:1", "--g", "theta:2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let terms = v["output"]["LR"]["bracket"]["terms"].as_array().unwrap();
    // The two strings of rank alpha_1 + alpha_2 differ in the sign of the loop letter.
    assert_eq!(terms.len(), 2);
    for t in terms {
        assert_eq!(t["coeff"].as_str().unwrap().trim_start_matches('-'), "1");
    }
}

#[test]
fn bad_input_is_an_error() {
    let (code, _) = affstr(&["roots", "--n", "1"]);
    assert_eq!(code, 101);
    let (code, _) = affstr(&["bracket", "--n", "2", "--orientation", "LR", "--f", "nope:1", "--g", "theta:0"]);
    assert_eq!(code, 1);
    let (code, _) = affstr(&["strings", "--n", "2", "--max-letters", "3"]);
    assert_eq!(code, 101);
}

#[test]
fn t_samples_flag() {
    let (code, out) = affstr(&[
        "bracket", "--n", "2", "--orientation", "RR", "--f", "root:1,1,0", "--g", "root:0,1,1", "--t-samples", "2,3,1/2",
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["config"]["config"]["t_samples"].as_array().unwrap().len(), 3);
}
