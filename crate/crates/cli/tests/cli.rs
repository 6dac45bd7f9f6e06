use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn irrtools(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irrtools"))
        .args(args)
        .env_remove("IRRTOOLS_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = irrtools(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn golden_outputs() {
    let cases: [(&[&str], &str); 6] = [
        (
            &["indices", "--family", "path:5", "--format", "json"],
            "indices_path5.json",
        ),
        (
            &["tables", "reproduce", "--table", "1", "--format", "csv"],
            "table1_reproduce.csv",
        ),
        (
            &[
                "bounds", "falsify", "--bound", "B8", "--nmax", "6", "--format", "csv",
            ],
            "falsify_b8_n6.csv",
        ),
        (
            &[
                "bounds",
                "check",
                "--bound",
                "all",
                "--table-row",
                "1:1",
                "--format",
                "csv",
            ],
            "check_table1_row1.csv",
        ),
        (&["plots", "emit", "--figure", "3"], "figure3.csv"),
        (
            &[
                "sequence",
                "analyze",
                "--sequence",
                "1,2,2,3,1,1",
                "--format",
                "json",
            ],
            "sequence_tree.json",
        ),
    ];
    for (args, file) in cases {
        assert_eq!(stdout(args), golden(file), "{args:?} differs from {file}");
    }
}

#[test]
fn path_indices_by_hand() {
    let v: Value = serde_json::from_str(&stdout(&[
        "indices", "--family", "path:5", "--format", "json",
    ]))
    .unwrap();
    // degrees 1,2,2,2,1: two unequal edges; six unequal pairs; M1 = 1+4+4+4+1
    assert_eq!(v["albertson"], 2);
    assert_eq!(v["sigma"], 2);
    assert_eq!(v["sigma_t"], 6);
    assert_eq!(v["zagreb_m1"], 14);
}

#[test]
fn table1_csv_has_eight_matching_rows() {
    let text = stdout(&["tables", "reproduce", "--table", "1", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let records: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    for column in ["T1", "T2", "sigma"] {
        let cells: Vec<_> = records.iter().filter(|r| &r[2] == column).collect();
        assert_eq!(cells.len(), 8);
        assert!(cells.iter().all(|r| &r[5] == "match"), "{column}");
    }
}

#[test]
fn json_round_trips_for_every_subcommand() {
    let invocations: &[&[&str]] = &[
        &["indices", "--family", "star:6"],
        &["indices", "--sequence", "3,3,2,2,2"],
        &[
            "sequence",
            "analyze",
            "--sequence",
            "3,5,7,5,6,8,10",
            "--convention",
            "paper-table",
        ],
        &["bounds", "check", "--bound", "all", "--sequence", "2,2,2,2"],
        &[
            "bounds",
            "check",
            "--bound",
            "B10",
            "--family",
            "star:8",
            "--class-mode",
        ],
        &["bounds", "falsify", "--bound", "B14", "--nmax", "5"],
        &[
            "bounds",
            "falsify",
            "--bound",
            "B8",
            "--nmax",
            "7",
            "--samples",
            "20",
            "--seed",
            "4",
        ],
        &["bounds", "list"],
        &["enumerate", "--n", "6"],
        &["enumerate", "--n", "10", "--count-only"],
        &[
            "extremal",
            "--objective",
            "sigma",
            "--direction",
            "min",
            "--n",
            "7",
        ],
        &[
            "extremal",
            "--objective",
            "albertson",
            "--direction",
            "max",
            "--degrees",
            "3,3,1,1,1,1",
        ],
        &["tables", "reproduce", "--table", "2"],
        &["tables", "export", "--table", "1"],
        &["stats", "correlate", "--table", "1"],
        &["stats", "regress", "--table", "2", "--predict", "400,200"],
        &["plots", "emit", "--figure", "1"],
    ];
    for args in invocations {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let text = stdout(&full);
        let parsed: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
        assert_eq!(text, again, "{args:?} is not a fixed point");
    }
}

#[test]
fn identical_argv_gives_identical_bytes() {
    let args = [
        "bounds",
        "falsify",
        "--bound",
        "B9",
        "--nmax",
        "9",
        "--samples",
        "200",
        "--seed",
        "17",
        "--format",
        "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
    let other_seed = [
        "bounds",
        "falsify",
        "--bound",
        "B9",
        "--nmax",
        "9",
        "--samples",
        "200",
        "--seed",
        "18",
        "--format",
        "json",
    ];
    let v: Value = serde_json::from_str(&stdout(&other_seed)).unwrap();
    assert_eq!(v["mode"]["seed"], 18);
}

#[test]
fn exit_codes() {
    // violated probative report under --expect-hold
    let out = irrtools(&[
        "bounds",
        "check",
        "--bound",
        "B8",
        "--family",
        "path:6",
        "--expect-hold",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stdout.is_empty());
    let out = irrtools(&[
        "bounds",
        "check",
        "--bound",
        "B14",
        "--family",
        "path:6",
        "--expect-hold",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // without the flag a violation is not an error
    let out = irrtools(&["bounds", "check", "--bound", "B8", "--family", "path:6"]);
    assert_eq!(out.status.code(), Some(0));

    for args in [
        &["indices", "--sequence", "1,x"][..],
        &["indices", "--graph", "/definitely/not/here.txt"],
        &["indices", "--family", "path:5", "--sequence", "1,1"],
        &["indices"],
        &["enumerate", "--n", "5", "--bogus"],
        &["enumerate", "--n", "40"],
        &["bounds", "check", "--bound", "B99", "--family", "path:4"],
        &[
            "bounds", "check", "--bound", "B9", "--family", "path:4", "--p", "4",
        ],
        &["tables", "reproduce", "--table", "3"],
    ] {
        let out = irrtools(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(!err.trim().is_empty(), "{args:?} printed no message");
    }
}

#[test]
fn domain_errors_are_one_line() {
    for (args, needle) in [
        (
            &["indices", "--sequence", "1,x"][..],
            "malformed sequence literal",
        ),
        (
            &["indices", "--graph", "/definitely/not/here.txt"],
            "cannot read graph file",
        ),
        (&["enumerate", "--n", "40"], "IRRTOOLS_MAX_N"),
    ] {
        let out = irrtools(args);
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.contains(needle), "{err}");
    }
}

#[test]
fn cap_from_environment_and_flag() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_irrtools"));
        cmd.args(["enumerate", "--n", "8", "--count-only"])
            .args(extra);
        match env {
            Some(v) => cmd.env("IRRTOOLS_MAX_N", v),
            None => cmd.env_remove("IRRTOOLS_MAX_N"),
        };
        cmd.output().unwrap().status.code()
    };
    assert_eq!(run(None, &[]), Some(0));
    assert_eq!(run(Some("7"), &[]), Some(1));
    assert_eq!(run(Some("7"), &["--max-n", "8"]), Some(0));
}

#[test]
fn graph_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c4.txt");
    std::fs::write(&graph, "# a 4-cycle\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let out = dir.path().join("report.json");
    let text = stdout(&[
        "indices",
        "--graph",
        graph.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(text.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["sigma"], 0);
    assert_eq!(v["zagreb_m1"], 16);
}

#[test]
fn enumerate_counts_and_extremal_witness() {
    let v: Value = serde_json::from_str(&stdout(&[
        "enumerate",
        "--n",
        "10",
        "--count-only",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["count"], 106);
    let v: Value = serde_json::from_str(&stdout(&[
        "extremal",
        "--objective",
        "sigma",
        "--direction",
        "max",
        "--n",
        "9",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["optimum"], 8 * 7 * 7);
    assert_eq!(v["witness"], serde_json::json!([0, 1, 1, 1, 1, 1, 1, 1, 1]));
}

#[test]
fn plot_series_are_csv_by_default() {
    let text = stdout(&["plots", "emit", "--figure", "1"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().unwrap().clone();
    assert_eq!(&header[0], "n");
    assert!(header.iter().any(|h| h == "star_sigma"));
    assert_eq!(reader.records().count(), 18);
}
