use std::process::{Command, Output};

fn biharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biharm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn roots_of_the_cp2_condition() {
    let o = biharm(&["roots", "--poly", "3*X^2 - 8*X + 1", "--interval", "(0,inf)", "--width", "1/1000000"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("roots: 2"), "{text}");
    // (4 - sqrt 13)/3 = 0.13148..., (4 + sqrt 13)/3 = 2.53518...
    assert!(text.contains("~ 0.131483") && text.contains("~ 2.535184"), "{text}");
}

#[test]
fn roots_none() {
    let o = biharm(&["roots", "--poly", "X^2 + 1", "--interval", "(-inf,inf)"]);
    assert!(stdout(&o).contains("roots: 0"));
    let o = biharm(&["roots", "--poly", "9*X^4 - 40*X^3 + 158*X^2 - 40*X + 9", "--interval", "(1,inf)"]);
    assert!(stdout(&o).contains("roots: 0"));
}

#[test]
fn parse_errors_show_position() {
    let o = biharm(&["roots", "--poly", "3*X^^2", "--interval", "(0,inf)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 4"), "{err}");
    assert!(err.contains("      ^"), "{err}");
    let o = biharm(&["roots", "--poly", "X", "--interval", "[0,inf]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(biharm(&["verify", "tube", "--family", "C", "--n", "6"]).status.code(), Some(2));
    assert_eq!(biharm(&["verify", "tube", "--family", "F", "--n", "6"]).status.code(), Some(2));
    assert_eq!(biharm(&["verify", "chain", "--case", "3"]).status.code(), Some(2));
    assert_eq!(biharm(&["verify", "ruled", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn tube_report_json() {
    let o = biharm(&["verify", "tube", "--family", "D", "--n", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["scenario"], "type-DE");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["seed"], 1);
    for step in v["steps"].as_array().unwrap() {
        for key in ["name", "anchor", "artifact", "scalar", "counts", "enclosures", "millis"] {
            assert!(step.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn ruled_markdown_and_out_file() {
    let dir = std::env::temp_dir().join(format!("biharm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ruled.md");
    let o = biharm(&["verify", "ruled", "--n", "3", "--format", "md", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let md = std::fs::read_to_string(&path).unwrap();
    assert!(md.contains("ruled hypersurfaces are minimal"));
    assert!(md.contains("verdict n=3"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn chain_case_one_fails_on_the_printed_quartic() {
    let o = biharm(&["verify", "chain", "--case", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&str> = v["steps"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["passed"] == false)
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["quartic"]);
}

#[test]
fn verify_all_is_deterministic() {
    let a = biharm(&["verify", "all"]);
    let b = biharm(&["verify", "all"]);
    assert_eq!(a.stdout, b.stdout);
    // the case-1 quartic mismatch makes the aggregate fail
    assert_eq!(a.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["scenarios"].as_array().unwrap().len(), 8);
}
