use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn kpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpath"))
        .args(args)
        .output()
        .expect("run kpath")
}

fn write_graph(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn triangle(dir: &TempDir) -> String {
    write_graph(dir, "k3.txt", "3 3 undirected\n0 1\n1 2\n0 2\n")
}

fn report(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "one JSON line: {text:?}");
    serde_json::from_str(text.trim()).unwrap()
}

fn without_time(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_time");
    v
}

#[test]
fn decide_dfs_on_triangle_is_yes() {
    let dir = TempDir::new().unwrap();
    let out = kpath(&[
        "decide",
        "--input",
        &triangle(&dir),
        "--k",
        "3",
        "--algo",
        "dfs",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["decision"], "YES");
    assert_eq!(r["algorithm"], "dfs");
    assert_eq!(r["trials_run"], 1);
    assert!(r["witness"].is_null());
    assert!(r["wall_time"].as_f64().unwrap() >= 0.0);
}

#[test]
fn decide_algebraic_on_edgeless_graph_is_no() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "e.txt", "6 0 undirected\n");
    let out = kpath(&["decide", "--input", &g, "--k", "4", "--algo", "algebraic"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["decision"], "NO");
}

#[test]
fn every_engine_decides_the_triangle() {
    let dir = TempDir::new().unwrap();
    let g = triangle(&dir);
    for algo in [
        "dfs",
        "color-coding",
        "divide-color",
        "count-ie",
        "count-colorful",
        "algebraic",
    ] {
        let out = kpath(&[
            "decide", "--input", &g, "--k", "3", "--algo", algo, "--seed", "5",
        ]);
        assert_eq!(out.status.code(), Some(0), "{algo}");
        assert_eq!(report(&out)["algorithm"], algo);
    }
}

#[test]
fn witness_flag() {
    let dir = TempDir::new().unwrap();
    let g = triangle(&dir);
    let out = kpath(&[
        "decide",
        "--input",
        &g,
        "--k",
        "3",
        "--algo",
        "color-coding",
        "--witness",
    ]);
    let w = report(&out)["witness"].as_array().unwrap().len();
    assert_eq!(w, 3);
    let out = kpath(&[
        "decide",
        "--input",
        &g,
        "--k",
        "3",
        "--algo",
        "algebraic",
        "--witness",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not produce witnesses"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let g = triangle(&dir);
    let bad = write_graph(&dir, "bad.txt", "3 2 undirected\n0 1\n");
    let loop_ = write_graph(&dir, "loop.txt", "3 1 undirected\n1 1\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["decide", "--input", &g, "--k", "3", "--algo", "nosuch"],
        vec!["decide", "--input", &g, "--k", "0", "--algo", "dfs"],
        vec!["decide", "--input", &g, "--k", "x", "--algo", "dfs"],
        vec![
            "decide",
            "--input",
            &g,
            "--k",
            "3",
            "--algo",
            "color-coding",
            "--trials",
            "0",
        ],
        vec!["decide", "--input", &bad, "--k", "2", "--algo", "dfs"],
        vec!["decide", "--input", &loop_, "--k", "2", "--algo", "dfs"],
        vec![
            "decide",
            "--input",
            "/no/such/file",
            "--k",
            "2",
            "--algo",
            "dfs",
        ],
        vec![
            "count",
            "--input",
            &g,
            "--k",
            "3",
            "--algo",
            "appendix-a",
            "--colors",
            "1,2",
        ],
        vec![
            "count",
            "--input",
            &g,
            "--k",
            "3",
            "--algo",
            "appendix-a",
            "--colors",
            "1,2,x",
        ],
        vec!["count", "--input", &g, "--k", "3", "--algo", "nosuch"],
        vec![
            "bench",
            "--kmax",
            "3",
            "--reps",
            "0",
            "--out",
            "/tmp/unused.jsonl",
        ],
        vec![
            "bench",
            "--kmax",
            "3",
            "--reps",
            "1",
            "--out",
            "/no/such/dir/b.jsonl",
        ],
        vec!["frobnicate"],
        vec![],
    ];
    for args in cases {
        let out = kpath(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn parse_error_names_the_line() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "bad.txt", "3 2 undirected\n0 1\n1 x\n");
    let out = kpath(&["decide", "--input", &g, "--k", "2", "--algo", "dfs"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn count_examples() {
    let dir = TempDir::new().unwrap();
    let g = triangle(&dir);
    let c = |args: &[&str]| {
        let mut full = vec!["count", "--input", &g];
        full.extend_from_slice(args);
        let out = kpath(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        report(&out)["count"].as_str().unwrap().to_owned()
    };
    assert_eq!(c(&["--k", "3", "--algo", "ie"]), "3");
    assert_eq!(c(&["--k", "3", "--algo", "dfs"]), "3");
    assert_eq!(
        c(&["--k", "3", "--algo", "appendix-a", "--colors", "1,2,3"]),
        "6"
    );
    assert_eq!(
        c(&["--k", "3", "--algo", "colorful-ie", "--colors", "1,2,3"]),
        "6"
    );
    assert_eq!(c(&["--k", "5", "--algo", "ie"]), "0");
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kpath"))
        .args(["count", "--input", "-", "--k", "4", "--algo", "ie"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"4 3 directed\n0 1\n1 2\n2 3\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["count"], "1");
}

#[test]
fn reports_are_deterministic_per_seed() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(
        &dir,
        "g.txt",
        "8 10 undirected\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n1 5\n2 7\n6 7\n",
    );
    for algo in [
        "color-coding",
        "divide-color",
        "count-colorful",
        "algebraic",
    ] {
        let args = [
            "decide",
            "--input",
            &g,
            "--k",
            "6",
            "--algo",
            algo,
            "--seed",
            "42",
            "--witness",
        ];
        let a = without_time(report(&kpath(&args)));
        let b = without_time(report(&kpath(&args)));
        assert_eq!(a, b, "{algo}");
    }
    let args = [
        "count",
        "--input",
        &g,
        "--k",
        "5",
        "--algo",
        "colorful-ie",
        "--seed",
        "7",
    ];
    assert_eq!(
        without_time(report(&kpath(&args))),
        without_time(report(&kpath(&args)))
    );
}

#[test]
fn verify_passes_and_catches_injected_fault() {
    let out = kpath(&["verify", "--max-n", "4", "--graphs", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 8);

    let out = kpath(&["verify", "--max-n", "4", "--graphs", "40", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL  sub_path = dfs count"));
    let dump: String = text
        .split("counterexample for \"sub_path = dfs count\":\n")
        .nth(1)
        .unwrap()
        .lines()
        .skip(1)
        .take_while(|l| !l.is_empty())
        .map(|l| format!("{l}\n"))
        .collect();
    assert!(
        kpath::graph::parse_graph(&dump).is_ok(),
        "dump must parse: {dump:?}"
    );
}

#[test]
fn bench_writes_parseable_json_lines() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bench.jsonl");
    let p = path.to_str().unwrap();
    for _ in 0..2 {
        let out = kpath(&[
            "bench", "--kmax", "4", "--family", "random", "--reps", "2", "--seed", "3", "--out", p,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let table = String::from_utf8(out.stdout).unwrap();
        assert!(table.lines().any(|l| l.starts_with("algebraic")));
    }
    let lines = read_lines(&path);
    // Two appended runs of 3 k values x 2 reps x 6 engines.
    assert_eq!(lines.len(), 72);
    for v in &lines {
        for key in [
            "algorithm",
            "k",
            "seed",
            "trials_run",
            "decision",
            "witness",
            "count",
            "wall_time",
            "n",
            "m",
            "family",
            "rep",
        ] {
            assert!(v.get(key).is_some(), "missing {key} in {v}");
        }
        assert!(v["rep"].as_u64().unwrap() < 2);
    }
}

fn read_lines(path: &Path) -> Vec<Value> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect()
}
