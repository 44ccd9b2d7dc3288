use std::process::{Command, Output};

use serde_json::Value;

fn floer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_floer")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = floer(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn present_shape() {
    let v = json(&["present", "2", "--format", "json"]);
    assert_eq!(v["genus"], 2);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["R"].as_array().unwrap().len(), 3);
    assert_eq!(v["order"], "wdeg(2,4,6)+lex(a>b>c)");
    assert_eq!(v["standard_monomials"], serde_json::json!([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]));
    let first = &v["groebner"][0]["terms"][0];
    assert_eq!(first["c"], serde_json::json!(["1", "0"]));
    assert_eq!(first["e"].as_array().unwrap().len(), 3);
}

#[test]
fn genus_flag_matches_positional() {
    assert_eq!(floer(&["table", "3"]).stdout, floer(&["table", "--genus", "3"]).stdout);
}

#[test]
fn spectrum_shape() {
    let v = json(&["spectrum", "2", "--format", "json"]);
    assert_eq!(v["certified"], true);
    let entries = v["entries"].as_array().unwrap();
    let indices: Vec<i64> = entries.iter().map(|e| e["i"].as_i64().unwrap()).collect();
    assert_eq!(indices, [-1, 0, 1]);
    assert_eq!(entries[2]["eig"], serde_json::json!([["4", "0"], ["-8", "0"], ["0", "0"]]));
}

#[test]
fn decompose_shape() {
    let v = json(&["decompose", "3", "--format", "json"]);
    assert_eq!(v["certified"], true);
    let summands = v["summands"].as_array().unwrap();
    let dims: Vec<u64> = summands.iter().map(|s| s["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 2, 4, 2, 1]);
    for s in summands {
        assert_eq!(s["basis"].as_array().unwrap().len() as u64, s["dim"].as_u64().unwrap());
    }
    assert_eq!(summands[0]["eig"][0], serde_json::json!(["0", "-8"]));
}

#[test]
fn table_and_conjecture_shapes() {
    let t = json(&["table", "3", "--format", "json"]);
    assert_eq!(t["total_dim"], 48);
    assert_eq!(t["euler_char"], 0);
    assert_eq!(t["rows"][3]["quotient_dim"], 0);
    let c = json(&["conjecture", "3", "--format", "json"]);
    let rows = c["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["match"] == true));
    assert_eq!(c["g_two_to_g"], 24);
    assert_eq!(c["g_two_to_g_matches"], false);
}

#[test]
fn text_rendering() {
    let out = String::from_utf8(floer(&["decompose", "3"]).stdout).unwrap();
    assert!(out.contains("(8i, 8, 0)"));
    assert!(out.contains("(-8i, 8, 0)"));
    let present = String::from_utf8(floer(&["present", "1"]).stdout).unwrap();
    assert!(present.contains("R2 = β - 8"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["present", "3", "--format", "json"][..],
        &["decompose", "3", "--format", "json"],
        &["verify", "--max-genus", "3"],
    ] {
        assert_eq!(floer(args).stdout, floer(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [&["present", "0"][..], &["present", "11"], &["present"], &["bogus"], &["present", "2", "--genus", "3"]]
    {
        assert_eq!(floer(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(floer(&["verify", "--max-genus", "0"]).status.code(), Some(2));
    assert_eq!(floer(&["table", "2", "--out", "/nonexistent/dir/x.json"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = floer(&["verify", "--max-genus", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = String::from_utf8(ok.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS ") || l.ends_with(" failed")));

    // The displayed genus 3 local ideals are not ideals of the quotient.
    let out = floer(&["verify", "--max-genus", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["example_genus_3"]);
    assert_eq!(v["failed"], 1);
}

#[test]
fn out_writes_file() {
    let path = std::env::temp_dir().join(format!("floer-cli-test-{}.json", std::process::id()));
    let out = floer(&["table", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["total_dim"], 8);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn golden_outputs() {
    let cases = [
        (&["present", "2", "--format", "json"][..], include_str!("golden/present_2.json")),
        (&["table", "3"][..], include_str!("golden/table_3.txt")),
        (&["conjecture", "3"][..], include_str!("golden/conjecture_3.txt")),
        (&["spectrum", "3", "--format", "json"][..], include_str!("golden/spectrum_3.json")),
    ];
    for (args, expected) in cases {
        assert_eq!(String::from_utf8(floer(args).stdout).unwrap(), expected, "{args:?}");
    }
}
