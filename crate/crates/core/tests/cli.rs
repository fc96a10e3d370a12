use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_placticc"))
        .args(args)
        .output()
        .unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_placticc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn insertion_commands() {
    let o = run(&["insert", "--n", "2", "[1 2]", "[1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[1] [1 2]\n");
    let o = run(&["normalize", "--n", "2", "[1 2][1][2 -2]"]);
    assert_eq!(stdout(&o), "[] [1] [1 2]\n");
    let o = run(&["product", "--n", "2", "[1 2]", "[1]"]);
    assert_eq!(stdout(&o), "[1] [1 2]\n");
}

#[test]
fn output_reparses() {
    let first = stdout(&run(&["normalize", "--n", "3", "[2 3] [1] [-3] [] [1 -1]"]));
    let second = stdout(&run(&["normalize", "--n", "3", first.trim()]));
    assert_eq!(first, second);
}

#[test]
fn crystal_commands() {
    assert_eq!(
        stdout(&run(&["crystal", "--n", "2", "--op", "f", "--i", "1", "1 1"])),
        "2 1\n"
    );
    assert_eq!(
        stdout(&run(&["crystal", "--n", "2", "--op", "f", "--i", "1", "1 2"])),
        "undefined\n"
    );
    assert_eq!(
        stdout(&run(&["crystal", "--n", "2", "--op", "f", "--i", "2", "[1 2]"])),
        "[1 -2]\n"
    );
    assert_eq!(stdout(&run(&["hw", "--n", "2", "[2] [1]"])), "[1] [1]\n");
    assert_eq!(stdout(&run(&["hw", "--n", "3", "-1 3"])), "1 1\n");
}

#[test]
fn tree_round_trip() {
    let o = run(&["tree", "encode", "--n", "2", "[1 2] [1] [2 -2]"]);
    assert_eq!(o.status.code(), Some(0));
    let json = stdout(&o);
    assert_eq!(json, "{\"1.0\":2,\"2.0\":1,\"2.1+\":1,\"2.1-\":1,\"n\":2,\"rank\":3}\n");
    let back = run_with_stdin(&["tree", "decode", "--n", "2", "-"], &json);
    assert_eq!(stdout(&back), "[1 2] [1] [2 -2]\n");
}

#[test]
fn tree_enumerate_lists_valid_trees() {
    let o = run(&["tree", "enumerate", "--n", "3", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 35);
}

#[test]
fn invalid_tree_exits_with_violations() {
    let o = run_with_stdin(&["tree", "decode", "--n", "2", "-"], "{\"n\":2,\"rank\":1,\"1.0\":3}");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation"));
}

#[test]
fn parse_errors_point_at_the_input() {
    let o = run(&["normalize", "--n", "2", "[1 3]"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("byte 3"), "{err}");
    assert!(err.contains("  [1 3]\n     ^"), "{err}");
    let o = run(&["normalize", "--n", "2", "[1 -1]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["normalize"]).status.code(), Some(2));
    assert_eq!(run(&["normalize", "--n", "0", "[]"]).status.code(), Some(2));
    assert_eq!(
        run(&["branchings", "--n", "5", "--variant", "acol"]).status.code(),
        Some(2)
    );
}

#[test]
fn branchings_report() {
    let dir = std::env::temp_dir().join(format!("placticc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n2.json");
    let o = run(&[
        "branchings",
        "--n",
        "2",
        "--variant",
        "acol-bullet",
        "--jobs",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["total"], 134);
    assert_eq!(report["variant"], "acol-bullet");
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);
    let max = report["max_shape"].as_array().unwrap();
    assert!(max[0].as_u64().unwrap() <= 4 && max[1].as_u64().unwrap() <= 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_suites() {
    for suite in ["shapes", "trees", "signature", "blocks"] {
        let o = run(&["verify", "--n", "2", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let reports = report
            .get("reports")
            .and_then(|r| r.as_array())
            .cloned()
            .unwrap_or(vec![report]);
        for r in reports {
            assert_eq!(r["violations"].as_array().unwrap().len(), 0, "{suite}");
        }
    }
}
