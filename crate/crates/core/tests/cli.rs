use std::process::{Command, Output};

fn catfam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catfam"))
        .args(args)
        .env_remove("CAP_STRUCTURES")
        .output()
        .expect("run catfam")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const OMEGA_MU: &str = "22,22,22,21,21,21,21,20,17,17,17,16,16,15,15,15,14,14,13,12,6,3,3,3";
const EXAMPLE_MU: &str = "11,11,11,11,10,9,9,9,9,9,9,7,7,3";

#[test]
fn enumerate_square_one() {
    let out = catfam(&["enumerate", "--square", "1", "--parts", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 15);
    assert_eq!(lines[0], "4,4,4,4");
    assert_eq!(lines[13], "1,1,1,1");
    assert_eq!(lines[14], "14 = c_4");
}

#[test]
fn enumerate_omega_and_small_core() {
    let out = catfam(&["enumerate", "--omega", "2", "--parts", "2"]);
    assert_eq!(stdout(&out), "3,3\n3,2\n2,2\n2,1\n1,1\n5 = b_{2,1}\n");

    let out = catfam(&["enumerate", "--square", "3,1,1", "--parts", "3"]);
    assert_eq!(stdout(&out), "3,3,1\n3,1,1\n2 = 2*c_1\n");
}

#[test]
fn enumerate_formats() {
    let out = catfam(&["enumerate", "--square", "3,1,1", "--parts", "3", "--format", "young-ascii"]);
    assert!(stdout(&out).starts_with("3,3,1\n[][][]\n[][][]\n[]\n\n3,1,1\n[][][]\n[]\n[]\n"));

    let out = catfam(&["enumerate", "--omega", "2", "--parts", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 5);
    assert_eq!(v["matches"], true);
    assert_eq!(v["partitions"][0]["parts"], serde_json::json!([3, 3]));
    assert_eq!(v["partitions"][0]["bound"], 3);

    let out = catfam(&["enumerate", "--omega", "2", "--parts", "2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_rejects_non_square_core() {
    let out = catfam(&["enumerate", "--square", "2,2", "--parts", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_exceeded_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_catfam"))
        .args(["enumerate", "--square", "1", "--parts", "6"])
        .env("CAP_STRUCTURES", "20")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_square_and_omega() {
    let out = catfam(&["check", "--mu", "7,6,5,3,3,3,3,3,3,1", "--square"]);
    assert!(stdout(&out).starts_with("b=3 k=3 core=(3,1,1)\n"));

    let out = catfam(&["check", "--mu", "1,1,1,1", "--square", "--core", "1"]);
    let text = stdout(&out);
    assert!(text.starts_with("b=1 k=1 core=(1)\n"), "{text}");
    assert!(text.ends_with("member of P^4(1): yes\n"));

    let out = catfam(&["check", "--mu", OMEGA_MU, "--omega", "4"]);
    let text = stdout(&out);
    assert!(text.contains("\n13\t16\t13\tM\n"));
    assert!(text.contains("\n20\t12\t12\tH\n"));
    assert!(text.ends_with("member of P^24(Omega_4): yes\n"));

    let out = catfam(&["check", "--mu", "3,1", "--omega", "2"]);
    assert!(stdout(&out).ends_with("member of P^2(Omega_2): no\n"));
}

#[test]
fn check_parse_error() {
    let out = catfam(&["check", "--mu", "1,2", "--square"]);
    assert_eq!(out.status.code(), Some(2));
    let out = catfam(&["check", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn convert_partition_to_pair() {
    let out = catfam(&["convert", "--to-trees", "--input", EXAMPLE_MU, "--roundtrip"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "9-(11(1 2 3(14) 4) 10(5)) | 9+(6 7(13 12) 8)\n((()()(())())(()))|(()(()())())\n"
    );
}

#[test]
fn convert_dot_round_trip_through_file() {
    let dir = std::env::temp_dir().join(format!("catfam-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dot = dir.join("pair.dot");
    let out = catfam(&[
        "convert",
        "--to-trees",
        "--input",
        EXAMPLE_MU,
        "--format",
        "dot",
        "--output",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let src = std::fs::read_to_string(&dot).unwrap();
    assert!(src.contains("ordinal="));
    let out = catfam(&["convert", "--to-partition", "--input", dot.to_str().unwrap(), "--roundtrip"]);
    assert_eq!(stdout(&out), format!("{EXAMPLE_MU}\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn convert_forest_both_ways() {
    let out = catfam(&["convert", "--to-forest", "--m", "4", "--input", OMEGA_MU, "--roundtrip"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let forest = text.lines().nth(1).unwrap();
    assert_eq!(forest.split(';').nth(1), Some("_"));

    let out = catfam(&["convert", "--to-partition", "--input", forest, "--roundtrip"]);
    assert_eq!(stdout(&out), format!("{OMEGA_MU}\n"));

    let out = catfam(&["convert", "--to-forest", "--input", "3,1", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn convert_json() {
    let out = catfam(&["convert", "--to-trees", "--input", "2,2,1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["minus"]["label"], "2-");
    assert_eq!(v["plus"]["children"][0]["label"], "1");

    let json = r#"{"parts":[3,3],"bound":4}"#;
    let out = catfam(&["convert", "--to-forest", "--input", json, "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["slots"].as_array().unwrap().len(), 3);
    let back = catfam(&["convert", "--to-partition", "--input", &stdout(&out), "--format", "json"]);
    let p: serde_json::Value = serde_json::from_slice(&back.stdout).unwrap();
    assert_eq!(p, serde_json::json!({"parts": [3, 3], "bound": 4}));
}

#[test]
fn convert_trivial_pair() {
    let out = catfam(&["convert", "--to-partition", "--input", "(())"]);
    assert_eq!(stdout(&out), "1\n");
    let out = catfam(&["convert", "--to-partition", "--input", "()|()"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn count_values() {
    assert_eq!(stdout(&catfam(&["count", "--catalan", "4"])), "14\n");
    assert_eq!(stdout(&catfam(&["count", "--ballot", "2", "1"])), "5\n");
    assert_eq!(stdout(&catfam(&["count", "--catalan", "0"])), "1\n");
    assert_eq!(stdout(&catfam(&["count", "--gen-catalan", "2", "3", "4"])), "90\n");
    assert_eq!(catfam(&["count", "--catalan", "x"]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports() {
    let report = std::env::temp_dir().join(format!("catfam-report-{}.json", std::process::id()));
    let out = catfam(&[
        "verify",
        "--max-parts",
        "6",
        "--max-m",
        "3",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.ends_with("17 suites, 0 failed\n"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 17);
    std::fs::remove_file(&report).unwrap();

    let again = catfam(&["verify", "--max-parts", "6", "--max-m", "3"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn verify_covering_detail() {
    let out = catfam(&["verify", "--max-parts", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("P^4: 35 partitions = 14 + 5 + (4+2) + "), "{text}");
    assert_eq!(text.matches("SKIP").count(), 7);
}

#[test]
fn verify_catches_injected_fault() {
    let out = catfam(&["verify", "--max-parts", "4", "--max-m", "2", "--inject-fault", "rising-flip"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL omega-closed-form"));
    assert!(text.contains("counterexample: mu="));
}
