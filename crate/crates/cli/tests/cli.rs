use std::io::Write;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jumpomega"))
        .args(args)
        .env_remove("JUMPOMEGA_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn equivalent_alternations() {
    let o = run(&[
        "decide",
        "equiv",
        &data("ab_loop.json"),
        &data("ba_loop.json"),
    ]);
    assert_eq!(stdout(&o), "true");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn window_membership() {
    let o = run(&[
        "kmember",
        "--k",
        "3",
        "--word",
        ";aabbba",
        &data("ab_loop.json"),
    ]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("true", Some(0)));
    let o = run(&[
        "kmember",
        "--k",
        "3",
        "--word",
        ";aaaabbbb",
        &data("ab_loop.json"),
    ]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("false", Some(1)));
    let o = run(&[
        "emember",
        "--kmax",
        "8",
        "--word",
        ";aaaabbbb",
        &data("ab_loop.json"),
    ]);
    assert_eq!(
        (stdout(&o).as_str(), o.status.code()),
        ("member-at 8", Some(0))
    );
    let o = run(&[
        "emember",
        "--kmax",
        "3",
        "--word",
        ";a",
        &data("ab_loop.json"),
    ]);
    assert_eq!(
        (stdout(&o).as_str(), o.status.code()),
        ("not-found-up-to 3", Some(1))
    );
}

#[test]
fn jumping_membership_exit_codes() {
    let o = run(&["member", "--word", "a;a", &data("ab_loop.json")]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("false", Some(1)));
    let o = run(&["member", "--word", "aabb;c", &data("balanced_prefix.json")]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("true", Some(0)));
}

#[test]
fn format_errors_exit_2() {
    let o = run(&["member", "--word", "x;a", &data("ab_loop.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("E_LETTER"));
    let o = run(&["member", "--word", "ab", &data("ab_loop.json")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "decide",
        "equiv",
        &data("ab_loop.json"),
        &data("balanced_prefix.json"),
    ]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("E_ALPHABET"));
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["canonize", &data("ab_loop.json")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn caps_exit_3() {
    let o = run(&[
        "--cap",
        "1",
        "build",
        "determinize",
        &data("balanced_prefix.json"),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("E_CAP"));
    let o = Command::new(env!("CARGO_BIN_EXE_jumpomega"))
        .args(["build", "bk", "--k", "2", &data("balanced_prefix.json")])
        .env("JUMPOMEGA_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jumpomega"))
        .args(["decide", "empty", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let text = std::fs::read_to_string(data("ab_loop.json")).unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("false", Some(1)));
}

#[test]
fn output_is_stable() {
    for args in [
        vec!["parikh", &data("balanced_prefix.json")[..]],
        vec!["build", "complement", &data("ab_loop.json")[..]],
        vec!["canonize", &data("half_inf.json")[..]],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn built_automata_parse_back() {
    let dir = std::env::temp_dir().join(format!("jumpomega-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("inter.json");
    let o = run(&[
        "build",
        "intersect",
        &data("ab_loop.json"),
        &data("ba_loop.json"),
    ]);
    std::fs::write(&path, &o.stdout).unwrap();
    let o = run(&["member", "--word", ";ab", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "true");
    let o = run(&[
        "decide",
        "equiv",
        path.to_str().unwrap(),
        &data("ab_loop.json"),
    ]);
    assert_eq!(stdout(&o), "true");
    let dba = dir.join("dba.json");
    let o = run(&["build", "dba", &data("half_inf.json")]);
    std::fs::write(&dba, &o.stdout).unwrap();
    let o = run(&["member", "--word", "aaab;b", dba.to_str().unwrap()]);
    assert_eq!(stdout(&o), "true");
    let o = run(&["member", "--word", "aab;b", dba.to_str().unwrap()]);
    assert_eq!(stdout(&o), "false");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn dot_and_decompose() {
    let o = run(&["export-dot", &data("ab_loop.json")]);
    assert!(stdout(&o).contains("doublecircle"));
    let o = run(&["decompose", &data("balanced_prefix.json")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn hidden_oracle() {
    let o = run(&[
        "oracle",
        "window",
        "--k",
        "3",
        "--word",
        ";aabbba",
        &data("ab_loop.json"),
    ]);
    assert_eq!(stdout(&o), "true");
    let o = run(&["oracle", "parikh", "--maxlen", "4", &data("ab_loop.json")]);
    assert_eq!(stdout(&o), "(1,0)\n(2,1)");
}
