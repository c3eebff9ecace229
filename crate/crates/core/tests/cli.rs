use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bellwords::output::parse_json;
use num_bigint::BigInt;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellwords"))
        .args(args)
        .env_remove("BELLWORDS_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_owned).collect()
}

/// Binary words of length `len` with no two adjacent zeros, by bit scan.
fn no_double_zero(len: u32) -> u64 {
    (0u64..1 << len)
        .filter(|w| (0..len.saturating_sub(1)).all(|i| (w >> i) & 0b11 != 0))
        .count() as u64
}

/// b-file rows `(i, F(i))` for `i` in `2..=hi`, where `F(n+2)` counts the
/// words above of length `n`.
fn fibonacci_bfile(dir: &Path, hi: u32) -> PathBuf {
    let mut text = String::from("# Fibonacci numbers, generated by exhaustive search\n");
    for i in 2..=hi {
        text.push_str(&format!("{i} {}\n", no_double_zero(i - 2)));
    }
    let path = dir.join("fib.txt");
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn seq_examples() {
    let o = run(&[
        "seq",
        "--family",
        "bounded-zero-runs",
        "--ell",
        "2",
        "--m",
        "1",
        "--n",
        "1..6",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(lines(&o), ["2", "3", "5", "8", "13", "21"]);

    let o = run(&["seq", "--f0", "1,1,1,1", "--m", "2", "--n", "1..4"]);
    assert_eq!(lines(&o), ["1", "3", "9", "27"]);

    let o = run(&[
        "seq",
        "--family",
        "ascent-avoiding",
        "--r",
        "0",
        "--m",
        "1",
        "--n",
        "2..4",
    ]);
    assert_eq!(lines(&o), ["3", "8", "21"]);
}

#[test]
fn seq_methods_agree() {
    let base = [
        "seq",
        "--family",
        "no-exact-run",
        "--ell",
        "2",
        "--m",
        "3",
        "--n",
        "0..15",
    ];
    let outputs: Vec<String> = ["transform", "bell", "closed-form"]
        .iter()
        .map(|m| {
            let mut args = base.to_vec();
            args.extend(["--method", m]);
            let o = run(&args);
            assert_eq!(code(&o), 0, "{m}");
            stdout(&o)
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn short_f0_prefix_is_a_usage_error() {
    let o = run(&["seq", "--f0", "1,1,1", "--m", "2", "--n", "1..4"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn seq_usage_errors() {
    assert_eq!(
        code(&run(&[
            "seq",
            "--family",
            "no-such-family",
            "--m",
            "1",
            "--n",
            "1..3"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "seq",
            "--family",
            "zero-blocks-exactly",
            "--ell",
            "1",
            "--m",
            "1",
            "--n",
            "1..3"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "seq",
            "--family",
            "odd-zero-runs",
            "--m",
            "1",
            "--n",
            "5..2"
        ])),
        2
    );
    assert_eq!(code(&run(&["seq", "--m", "1", "--n", "1..3"])), 2);
}

#[test]
fn csv_and_json_output() {
    let o = run(&[
        "seq",
        "--family",
        "ii-avoiding",
        "--q",
        "1",
        "--m",
        "1",
        "--n",
        "0..3",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&o), "n,value\n0,1\n1,2\n2,3\n3,5\n");

    let o = run(&[
        "seq",
        "--family",
        "odd-zero-runs",
        "--m",
        "2",
        "--n",
        "0..30",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let parsed = parse_json(&stdout(&o)).unwrap();
    assert_eq!(parsed.len(), 31);
    let plain = run(&[
        "seq",
        "--family",
        "odd-zero-runs",
        "--m",
        "2",
        "--n",
        "0..30",
    ]);
    let values: Vec<BigInt> = lines(&plain).iter().map(|l| l.parse().unwrap()).collect();
    assert_eq!(
        parsed.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
        values
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "transforms",
        "--len",
        "12",
        "--m-max",
        "3",
        "--json",
    ];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    let args = [
        "enumerate",
        "--family",
        "min-gap",
        "--ell",
        "1",
        "--m",
        "2",
        "--n",
        "6",
        "--by-blocks",
    ];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn bell_examples() {
    assert_eq!(
        lines(&run(&["bell", "--n", "3", "--k", "2", "--z", "1,2"])),
        ["6"]
    );
    assert_eq!(
        lines(&run(&[
            "bell",
            "--n",
            "5",
            "--k",
            "3",
            "--identity",
            "2",
            "--ell",
            "2"
        ])),
        ["60"]
    );
    assert_eq!(
        lines(&run(&["bell", "--n", "4", "--k", "4", "--z", "3"])),
        ["81"]
    );
    assert_eq!(
        lines(&run(&[
            "bell",
            "--n",
            "6",
            "--k",
            "2",
            "--z",
            "0,0,6,0,0",
            "--method",
            "oracle"
        ])),
        ["360"]
    );
    assert_eq!(
        lines(&run(&[
            "bell",
            "--n",
            "7",
            "--k",
            "3",
            "--identity",
            "4",
            "--r",
            "1",
            "--method",
            "oracle"
        ])),
        lines(&run(&[
            "bell",
            "--n",
            "7",
            "--k",
            "3",
            "--identity",
            "4",
            "--r",
            "1"
        ]))
    );
}

#[test]
fn bell_argument_errors() {
    assert_eq!(
        code(&run(&["bell", "--n", "4", "--k", "2", "--z", "1,2"])),
        2
    );
    assert_eq!(
        code(&run(&["bell", "--n", "2", "--k", "3", "--z", "1,2"])),
        2
    );
    assert_eq!(
        code(&run(&["bell", "--n", "2", "--k", "0", "--z", "1,2"])),
        2
    );
    assert_eq!(
        code(&run(&["bell", "--n", "2", "--k", "1", "--z", "1,x"])),
        2
    );
    assert_eq!(
        code(&run(&[
            "bell",
            "--n",
            "5",
            "--k",
            "3",
            "--identity",
            "2",
            "--ell",
            "1"
        ])),
        2
    );
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "--suite", "identities", "--n-max", "12"]);
    assert_eq!(code(&o), 0);
    assert!(lines(&o).iter().all(|l| l.starts_with("PASS")));

    let o = run(&[
        "verify",
        "--family",
        "ii-avoiding",
        "--q",
        "1",
        "--m",
        "1",
        "--n",
        "0..10",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let o = run(&[
        "verify",
        "--suite",
        "transforms",
        "--len",
        "20",
        "--m-max",
        "4",
    ]);
    assert_eq!(code(&o), 0);

    let o = run(&["verify", "--suite", "chebyshev", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_bellwords"))
        .args([
            "verify",
            "--family",
            "bounded-zero-runs",
            "--ell",
            "2",
            "--m",
            "1",
            "--n",
            "0..10",
        ])
        .env("BELLWORDS_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("m=1, n=7"), "{err}");

    let o = run(&[
        "verify",
        "--family",
        "bounded-zero-runs",
        "--ell",
        "2",
        "--n",
        "0..10",
        "--budget",
        "100",
    ]);
    assert_eq!(code(&o), 3);
    let o = run(&[
        "enumerate",
        "--f0",
        "1,1,1,1,1,1,1,1",
        "--m",
        "3",
        "--n",
        "8",
        "--budget",
        "10",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn bfile_compare_against_brute_force_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let path = fibonacci_bfile(dir.path(), 20);
    let file = path.to_str().unwrap();
    let family = ["--family", "bounded-zero-runs", "--ell", "2", "--m", "1"];

    let mut args = vec!["bfile-compare", "--file", file, "--offset", "2"];
    args.extend(family);
    let o = run(&args);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(lines(&o), ["match: 19 overlapping indices"]);

    // wrong offset must not match
    let mut args = vec!["bfile-compare", "--file", file, "--offset", "1"];
    args.extend(family);
    assert_eq!(code(&run(&args)), 1);

    let mut args = vec!["bfile-compare", "--file", file, "--offset", "100"];
    args.extend(family);
    let o = run(&args);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("no overlapping indices"));
}

#[test]
fn bfile_compare_reports_corrupted_index() {
    let dir = tempfile::tempdir().unwrap();
    let path = fibonacci_bfile(dir.path(), 15);
    let text = std::fs::read_to_string(&path)
        .unwrap()
        .replace("\n9 34\n", "\n9 35\n");
    std::fs::write(&path, text).unwrap();
    let o = run(&[
        "bfile-compare",
        "--file",
        path.to_str().unwrap(),
        "--offset",
        "2",
        "--family",
        "bounded-zero-runs",
        "--ell",
        "2",
        "--m",
        "1",
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("b-file index 9"), "{}", stdout(&o));
}

#[test]
fn malformed_bfile_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "# header\n1 1\n2  1\n").unwrap();
    let o = run(&[
        "bfile-compare",
        "--file",
        path.to_str().unwrap(),
        "--offset",
        "0",
        "--family",
        "odd-zero-runs",
        "--m",
        "1",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn enumerate_worked_example() {
    let o = run(&["enumerate", "--f0", "1,0,1,1,0", "--m", "2", "--n", "5"]);
    assert_eq!(code(&o), 0);
    let words = lines(&o);
    assert_eq!(words.len(), 32);
    assert!(words.contains(&"12000".to_string()));
    assert!(!words
        .iter()
        .any(|w| w.contains("101") || w.contains("0000")));

    let o = run(&[
        "enumerate",
        "--f0",
        "1,0,1,1,0",
        "--m",
        "2",
        "--n",
        "5",
        "--by-blocks",
    ]);
    assert!(lines(&o).iter().any(|l| l == "5 11111"));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}
