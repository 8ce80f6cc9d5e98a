//! Subprocess harness: every subcommand's output format and exit code.

use std::path::Path;
use std::process::{Command, Output};

fn fermatx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fermatx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn factor_text_output() {
    let out = fermatx(&["factor", "176400"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2^4 * 3^2 * 5^2 * 7^2\n");

    let out = fermatx(&["factor", "9991"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "97 * 103\n");

    let out = fermatx(&["factor", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 (empty product)\n");
}

#[test]
fn factor_stats_flag_appends_counters() {
    let out = fermatx(&["factor", "176400", "--stats"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("2^4 * 3^2 * 5^2 * 7^2\n"));
    assert!(text.contains("candidates_tested=6"));
    assert!(text.contains("filter_rejections=1"));
    assert!(text.contains("isqrt_confirmations=5"));
}

#[test]
fn factor_json_output() {
    let out = fermatx(&["factor", "176400", "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["n"], "176400");
    let factors = doc["factors"].as_array().unwrap();
    let pairs: Vec<(String, u64)> = factors
        .iter()
        .map(|f| {
            (
                f["p"].as_str().unwrap().to_string(),
                f["e"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        pairs,
        vec![
            ("2".to_string(), 4),
            ("3".to_string(), 2),
            ("5".to_string(), 2),
            ("7".to_string(), 2)
        ]
    );
    for key in ["candidates_tested", "filter_rejections", "isqrt_confirmations"] {
        assert!(doc["stats"][key].is_u64(), "missing stats field {key}");
    }

    // naturals stay decimal strings, never JSON numbers
    let big = "340282366920938463463374607431768211456"; // 2^128
    let out = fermatx(&["factor", big, "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["n"].as_str().unwrap(), big);
    assert_eq!(doc["factors"][0]["p"], "2");
    assert_eq!(doc["factors"][0]["e"], 128);
}

#[test]
fn factor_invalid_inputs_exit_3() {
    for bad in ["abc", "0", "-4", "1e6", "0x10"] {
        let out = fermatx(&["factor", bad]);
        assert_eq!(code(&out), 3, "input {bad:?}");
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn factor_budget_exhaustion_names_cofactor() {
    // 209458 = 2 * 104729; the prime cofactor needs ~52k candidates
    let out = fermatx(&["factor", "209458", "--budget", "10"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("104729"));
}

#[test]
fn isprime_verdicts_and_exit_codes() {
    let out = fermatx(&["isprime", "101"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "prime\n");

    let out = fermatx(&["isprime", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "prime\n");

    let out = fermatx(&["isprime", "105"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "composite\n");

    let out = fermatx(&["isprime", "104729", "--budget", "1000"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stdout(&out), "unresolved\n");

    let out = fermatx(&["isprime", "104729", "--unbounded"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "prime\n");

    for bad in ["1", "0", "xyz"] {
        let out = fermatx(&["isprime", bad]);
        assert_eq!(code(&out), 3, "input {bad:?}");
    }
}

#[test]
fn issquare_distinguishes_rejection_paths() {
    let out = fermatx(&["issquare", "11025"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "square root=105\n");

    let out = fermatx(&["issquare", "43"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "non-square (filter)\n");

    // 21 passes the digit filter but 4^2 = 16 != 21
    let out = fermatx(&["issquare", "21"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "non-square (confirmed)\n");

    let out = fermatx(&["issquare", "banana"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn split_reports_outcome_and_stats() {
    // 11^2 - 105 = 16 = 4^2: first candidate splits 105 = 15 * 7
    let out = fermatx(&["split", "105"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("b=11 c=4 factors=15,7\n"), "got {text:?}");
    assert!(text.contains("candidates_tested=1"));

    let out = fermatx(&["split", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("prime verdict at b=2 c=1\n"));

    let out = fermatx(&["split", "9991"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("b=100 c=3 factors=103,97\n"), "got {text:?}");
    assert!(text.contains("candidates_tested=1"));
}

#[test]
fn split_rejects_even_square_and_small() {
    for bad in ["4", "9", "1", "0", "11025"] {
        let out = fermatx(&["split", bad]);
        assert_eq!(code(&out), 3, "input {bad:?}");
    }
    let out = fermatx(&["split", "104729", "--budget", "100"]);
    assert_eq!(code(&out), 2);
}

fn parse_csv(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|line| line.split(',').map(|s| s.to_string()).collect())
        .collect()
}

#[test]
fn bench_odd_range_writes_49_agreeing_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("bench.csv");
    let out = fermatx(&[
        "bench",
        "3..99",
        "odd",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));

    let text = std::fs::read_to_string(&csv_path).unwrap();
    let rows = parse_csv(&text);
    assert_eq!(
        rows[0],
        vec![
            "n",
            "fermat_candidates",
            "fermat_time_ns",
            "trial_divisions",
            "trial_time_ns",
            "agree"
        ]
    );
    assert_eq!(rows.len(), 50); // header + 49 odd targets
    let mut expected = 3u64;
    for row in &rows[1..] {
        assert_eq!(row.len(), 6);
        assert_eq!(row[0], expected.to_string());
        for field in &row[1..5] {
            field.parse::<u128>().expect("numeric field");
        }
        assert_eq!(row[5], "true");
        expected += 2;
    }
}

#[test]
fn bench_single_targets_to_stdout() {
    let out = fermatx(&["bench", "176400"]);
    assert_eq!(code(&out), 0);
    let rows = parse_csv(&stdout(&out));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1][0], "176400");
    assert_eq!(rows[1][5], "true");

    // 9409 = 97^2 exercises the square-reduction path
    let out = fermatx(&["bench", "9409"]);
    assert_eq!(code(&out), 0);
    let rows = parse_csv(&stdout(&out));
    assert_eq!(rows[1][0], "9409");
    assert_eq!(rows[1][5], "true");
}

#[test]
fn bench_rejects_bad_targets() {
    let out = fermatx(&["bench", "1"]);
    assert_eq!(code(&out), 3);

    let out = fermatx(&["bench", "wat"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn bench_budget_exhaustion_exits_2() {
    let out = fermatx(&["bench", "104729", "--budget", "10"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("104729"));
}

#[test]
fn bench_out_path_must_be_writable() {
    let out = fermatx(&["bench", "15", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(code(&out), 3);
    assert!(!Path::new("/nonexistent-dir").exists());
}

#[test]
fn unknown_flags_and_conflicts_exit_3() {
    let out = fermatx(&["factor", "15", "--nope"]);
    assert_eq!(code(&out), 3);

    let out = fermatx(&["isprime", "15", "--budget", "5", "--unbounded"]);
    assert_eq!(code(&out), 3);

    let out = fermatx(&["--help"]);
    assert_eq!(code(&out), 0);
}
