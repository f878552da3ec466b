//! End-to-end tests of the `conjgraph` binary: exact output rows, exit
//! codes, determinism across reruns and worker counts, and the cache file
//! behavior.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_conjgraph"))
}

fn corpus_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpora")
        .join(file)
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("utf-8 stderr")
}

#[test]
fn invariants_row_for_k4_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k4.g6");
    std::fs::write(&file, "C~\n").unwrap();
    let output = bin()
        .args(["invariants", "--no-timing", "--file"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        stdout_of(&output),
        "C~ alpha=1 mu=2 gamma=1 gamma_t=2 gamma_c=1 gamma_e=2\n"
    );
}

#[test]
fn invariants_reads_stdin_and_marks_undefined_values() {
    // Two disjoint triangles: gamma_c is undefined, the rest still print.
    let mut child = bin()
        .args([
            "invariants",
            "--no-timing",
            "--invariants",
            "alpha,gamma_connected",
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"EwCW\n").unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output), "EwCW alpha=2 gamma_c=-\n");
}

#[test]
fn timing_footer_appears_unless_suppressed() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k4.g6");
    std::fs::write(&file, "C~\n").unwrap();
    let output = bin()
        .args(["invariants", "--file"])
        .arg(&file)
        .output()
        .unwrap();
    let last = stdout_of(&output).lines().last().unwrap().to_string();
    assert!(last.starts_with("# elapsed_ms="), "got footer {last:?}");
}

#[test]
fn check_is_byte_identical_across_worker_counts() {
    let run = |jobs: Option<&str>| {
        let mut cmd = bin();
        cmd.args(["check", "--theorem", "THM_3_2", "--no-timing", "--corpus"])
            .arg(corpus_path("cubic_le14.g6"));
        if let Some(jobs) = jobs {
            cmd.env("GF_JOBS", jobs);
        }
        let output = cmd.output().unwrap();
        assert_eq!(output.status.code(), Some(0));
        output.stdout
    };
    let default = run(None);
    assert_eq!(default, run(None));
    assert_eq!(default, run(Some("1")));
    assert_eq!(default, run(Some("3")));
    let text = std::str::from_utf8(&default).unwrap();
    // Nine cubic graphs attain the bound, all on ten vertices; the count was
    // frozen from the brute-force oracle.
    assert!(text.ends_with("# theorem=THM_3_2 graphs=621 violations=0 tight=9\n"));
}

#[test]
fn family_emits_the_twelve_vertex_equality_example() {
    let output = bin()
        .args(["family", "--G-r", "3", "--no-timing"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let graph6 = stdout_of(&output).trim();
    let g = conjgraph::parse_graph6(graph6).unwrap();
    assert_eq!(g.n(), 12);
    assert_eq!(g.regularity(), Some(3));
}

#[test]
fn usage_errors_exit_two_with_a_message() {
    let unknown = bin().arg("frobnicate").output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));
    assert!(!stderr_of(&unknown).is_empty());

    let both = bin()
        .args(["family", "--G-r", "3", "--claw-free", "1"])
        .output()
        .unwrap();
    assert_eq!(both.status.code(), Some(2));

    let missing = bin()
        .args([
            "check",
            "--theorem",
            "THM_3_2",
            "--corpus",
            "/nonexistent.g6",
        ])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr_of(&missing).starts_with("error: "));
}

#[test]
fn malformed_and_empty_corpora_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "C~\n\x7f!!\n").unwrap();
    let output = bin()
        .args(["invariants", "--file"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(
        stderr_of(&output).contains("line 2"),
        "got {:?}",
        stderr_of(&output)
    );

    let empty = dir.path().join("empty.g6");
    std::fs::write(&empty, "# nothing here\n").unwrap();
    let output = bin()
        .args(["invariants", "--file"])
        .arg(&empty)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("empty corpus"));
}

#[test]
fn duplicate_corpus_lines_warn_but_run() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("dup.g6");
    std::fs::write(&file, "C~\nC~\n").unwrap();
    let output = bin()
        .args(["invariants", "--no-timing", "--file"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output).lines().count(), 1);
    assert!(stderr_of(&output).contains("duplicate"));
}

#[test]
fn cache_file_fills_once_and_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("two.g6");
    std::fs::write(&file, "Bw\nC~\n").unwrap();
    let cache = dir.path().join("cache.tsv");

    let run = || {
        let output = bin()
            .args([
                "invariants",
                "--no-timing",
                "--invariants",
                "alpha,mu",
                "--file",
            ])
            .arg(&file)
            .arg("--cache")
            .arg(&cache)
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(0));
        output.stdout
    };
    let first = run();
    let written = std::fs::read_to_string(&cache).unwrap();
    assert!(
        written.contains("C~\talpha\t1\n"),
        "cache rows: {written:?}"
    );
    assert_eq!(written.lines().count(), 4);

    // A warm rerun answers from the cache and appends nothing.
    let second = run();
    assert_eq!(first, second);
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), written);
}

#[test]
fn verify_corpus_reports_every_proved_statement() {
    let output = bin()
        .args(["verify-corpus", "--no-timing", "--corpus"])
        .arg(corpus_path("cubic_le14.g6"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let lines: Vec<&str> = stdout_of(&output).lines().collect();
    // 17 registered statements minus the two still-open ones.
    assert_eq!(lines.len(), 15);
    assert!(lines.iter().all(|l| l.contains("graphs=621")));
    assert!(lines.iter().any(|l| l.starts_with("THM_2_2\t")));
    assert!(lines.iter().all(|l| !l.starts_with("CONJ")));

    let with_open = bin()
        .args([
            "verify-corpus",
            "--no-timing",
            "--include-conjectures",
            "--corpus",
        ])
        .arg(corpus_path("cubic_le14.g6"))
        .output()
        .unwrap();
    assert_eq!(with_open.status.code(), Some(0));
    assert_eq!(stdout_of(&with_open).lines().count(), 17);
}

#[test]
fn conjecture_output_is_ranked_and_deterministic() {
    let run = || {
        let output = bin()
            .args([
                "conjecture",
                "--no-timing",
                "--target",
                "gamma_connected",
                "--top",
                "10",
                "--corpus",
            ])
            .arg(corpus_path("cubic_le14.g6"))
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(0));
        output.stdout
    };
    let first = run();
    assert_eq!(first, run());
    let text = std::str::from_utf8(&first).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines
        .iter()
        .all(|l| l.starts_with("cubic: ") && l.contains("\ttouch=")));
    let touches: Vec<usize> = lines
        .iter()
        .map(|l| {
            l.split("\ttouch=")
                .nth(1)
                .unwrap()
                .split('\t')
                .next()
                .unwrap()
                .parse()
                .unwrap()
        })
        .collect();
    assert!(
        touches.windows(2).all(|w| w[0] >= w[1]),
        "touch order {touches:?}"
    );
}

#[test]
fn selftest_passes_on_the_embedded_corpus_prefix() {
    let output = bin()
        .args(["selftest", "--limit", "60", "--no-timing"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        stdout_of(&output),
        "# selftest graphs=60 invariants=11 mismatches=0\n"
    );
}
