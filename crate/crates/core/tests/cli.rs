use std::process::{Command, Output};

fn hyperfact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperfact"))
        .args(args)
        .env_remove("HYPERFACT_JOBS")
        .output()
        .expect("spawn hyperfact")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bound_examples() {
    let o = hyperfact(&["bound", "--theorem", "2", "99990000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "200");
    let o = hyperfact(&["bound", "--theorem", "3", "5997600"]);
    assert_eq!(stdout(&o).trim(), "140");

    let o = hyperfact(&["bound", "--theorem", "2", "--format", "json", "99990000"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], 200);
    assert_eq!(v["certificate"]["holds"]["kind"], "mul_sqrt");
}

#[test]
fn triples_examples() {
    let o = hyperfact(&["triples", "3950100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3950100 = 1881·2100 = 1890·2090 = 1900·2079"));

    let o = hyperfact(&["triples", "72", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let found = v["triples"].as_array().unwrap().iter().any(|t| {
        [
            ("A", 6),
            ("B", 12),
            ("a1", 2),
            ("b1", 3),
            ("a2", 3),
            ("b2", 4),
        ]
        .iter()
        .all(|(k, x)| t[*k] == *x)
    });
    assert!(found);

    let o = hyperfact(&["triples", "97"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no triple"));
}

#[test]
fn family_and_oracle() {
    let o = hyperfact(&["family", "poly", "2"]);
    assert!(stdout(&o).contains("N=72"));
    let o = hyperfact(&["family", "pell", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hyperfact(&["family", "pell", "7"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("last valid index 6"));

    for which in ["m3", "m3s"] {
        let o = hyperfact(&["oracle", which, "3950100"]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("agree"));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bound", "--theorem", "5", "10"][..],
        &["bound", "--theorem", "2", "9223372036854775808"],
        &["verify", "--theorem", "2", "--from", "1", "--to", "100"],
        &["verify", "--theorem", "2", "--from", "100", "--to", "6"],
        &["triples", "10", "--format", "csv"],
        &["nonsense"],
    ] {
        let o = hyperfact(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(
            String::from_utf8_lossy(&o.stderr).contains("Usage:"),
            "{args:?}"
        );
    }
}

#[test]
fn env_jobs_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_hyperfact"))
        .args(["verify", "--theorem", "2", "--from", "6", "--to", "100"])
        .env("HYPERFACT_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn theorem0_known_witness_is_success() {
    let o = hyperfact(&[
        "verify",
        "--theorem",
        "0",
        "--from",
        "2",
        "--to",
        "10000",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let violations = v["violations"].as_array().unwrap();
    assert_eq!(violations.len(), 1);
    assert_eq!(violations[0]["N"], 72);
}

#[test]
fn sweep_output_independent_of_jobs_and_chunking() {
    for (theorem, lo, hi) in [
        ("1", "1", "20000"),
        ("3", "6", "20000"),
        ("0.5", "1", "3000"),
    ] {
        for format in ["json", "csv"] {
            let base = [
                "verify",
                "--theorem",
                theorem,
                "--from",
                lo,
                "--to",
                hi,
                "--no-timing",
                "--format",
                format,
            ];
            let reference = hyperfact(&[&base[..], &["--jobs", "1"]].concat());
            assert_eq!(reference.status.code(), Some(0));
            for (jobs, chunk) in [("2", "333"), ("5", "4096"), ("3", "1")] {
                let o = hyperfact(&[&base[..], &["--jobs", jobs, "--chunk-len", chunk]].concat());
                assert_eq!(
                    o.stdout, reference.stdout,
                    "theorem {theorem} {format} jobs={jobs} chunk={chunk}"
                );
            }
        }
    }
}

#[test]
fn timing_fields_present_by_default() {
    let o = hyperfact(&[
        "verify",
        "--theorem",
        "2",
        "--from",
        "6",
        "--to",
        "100",
        "--format",
        "json",
    ]);
    let text = stdout(&o);
    assert!(text.contains("\"elapsed_ms\"") && text.contains("\"chunk_count\""));
    let o = hyperfact(&[
        "verify",
        "--theorem",
        "2",
        "--from",
        "6",
        "--to",
        "100",
        "--format",
        "json",
        "--no-timing",
    ]);
    let text = stdout(&o);
    assert!(!text.contains("elapsed_ms") && !text.contains("chunk_count"));
}

#[test]
fn out_file_written_whole() {
    let dir = std::env::temp_dir().join(format!("hyperfact-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = hyperfact(&[
        "verify",
        "--theorem",
        "2",
        "--from",
        "6",
        "--to",
        "5000",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["theorem"], "2");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    let leftovers: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(leftovers.len(), 1, "temporary file left behind");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn csv_rows_sorted() {
    let o = hyperfact(&[
        "verify",
        "--theorem",
        "2",
        "--from",
        "6",
        "--to",
        "20000",
        "--format",
        "csv",
        "--jobs",
        "4",
        "--chunk-len",
        "100",
    ]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("N,statistic,bound,kind"));
    let ns: Vec<u64> = lines
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert!(!ns.is_empty());
    assert!(ns.windows(2).all(|w| w[0] <= w[1]));
}
