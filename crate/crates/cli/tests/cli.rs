//! End-to-end tests of the `altdet` binary against the bundled fixtures.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use altdet::{parse_document, Machine};
use altdet_core::dfa_equiv;

const FIXTURES: [&str; 4] = [
    "parity_afa.txt",
    "parity_dfa4.txt",
    "ends_with_a_nfa.txt",
    "ends_with_a_dfa.txt",
];

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn fixtures_round_trip_through_the_text_format() {
    for name in FIXTURES {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let doc = parse_document(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        doc.build().unwrap_or_else(|e| panic!("{name}: {e}"));
        let printed = doc.to_text();
        let again = parse_document(&printed).unwrap();
        assert_eq!(again.to_text(), printed, "{name} not stable under reprint");
    }
}

#[test]
fn accept_on_the_parity_fixture() {
    let path = fixture("parity_afa.txt");
    let path = path.to_str().unwrap();
    for (word, code, verdict) in [
        ("ab", 0, "accept"),
        ("aa", 0, "accept"),
        ("aabb", 0, "accept"),
        ("b", 1, "reject"),
        ("aab", 1, "reject"),
        ("", 1, "reject"),
        ("eps", 1, "reject"),
    ] {
        let out = run(&["accept", path, word]);
        assert_eq!(out.status.code(), Some(code), "word {word:?}");
        assert_eq!(stdout(&out).trim(), verdict, "word {word:?}");
    }
}

#[test]
fn accept_respects_the_algebra_flag() {
    let path = fixture("ends_with_a_nfa.txt");
    let path = path.to_str().unwrap();
    let out = run(&["accept", path, "a", "--algebra", "max"]);
    assert_eq!(out.status.code(), Some(0));
    // universally, the run that stays in q0 is non-accepting
    let out = run(&["accept", path, "a", "--algebra", "min"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn determinize_output_parses_and_matches_the_reference_dfa() {
    let path = fixture("ends_with_a_nfa.txt");
    let out = run(&["determinize", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("# start: s0"), "missing start comment:\n{text}");
    assert!(text.contains("# s0 = {q0}"), "missing decode comment:\n{text}");

    let doc = parse_document(&text).unwrap();
    let det = match doc.build().unwrap() {
        Machine::Dfa(d) => d,
        other => panic!("expected a dfa, got {other:?}"),
    };
    let reference = std::fs::read_to_string(fixture("ends_with_a_dfa.txt")).unwrap();
    let reference = match parse_document(&reference).unwrap().build().unwrap() {
        Machine::Dfa(d) => d,
        _ => unreachable!(),
    };
    assert_eq!(dfa_equiv(&det, 0, &reference, 0).unwrap(), None);
}

#[test]
fn equiv_verdicts_and_witness() {
    let out = run(&[
        "equiv",
        fixture("ends_with_a_nfa.txt").to_str().unwrap(),
        fixture("ends_with_a_dfa.txt").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "equivalent");

    // the deterministic parity machine accepts the empty word; the
    // alternating one rejects it, so the shortest witness is eps
    let out = run(&[
        "equiv",
        fixture("parity_afa.txt").to_str().unwrap(),
        fixture("parity_dfa4.txt").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "inequivalent witness=eps");
}

#[test]
fn parse_errors_exit_with_code_2() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "kind: dfa\nbogus line without a colon").unwrap();
    let out = run(&["accept", file.path().to_str().unwrap(), "a"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "stderr: {}", stderr(&out));

    let out = run(&["accept", fixture("parity_afa.txt").to_str().unwrap(), "xyz"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["accept", "/nonexistent/file.txt", "a"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn capacity_overrun_exits_with_code_3() {
    let out = run(&[
        "determinize",
        fixture("ends_with_a_nfa.txt").to_str().unwrap(),
        "--state-cap",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", stderr(&out));
}

#[test]
fn export_dot_shows_structure() {
    let out = run(&["export-dot", fixture("parity_afa.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("doublecircle"), "accepting states marked");
    assert!(text.contains("diamond"), "conjunction nodes present");

    let out = run(&["export-dot", fixture("ends_with_a_dfa.txt").to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("\"s\" -> \"t\" [label=\"a\"]"));
}

#[test]
fn check_laws_prints_diagram_lines_and_a_summary() {
    let out = run(&["check-laws", "--suite", "lemma"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    let (last, diagrams) = lines.split_last().unwrap();
    assert!(!diagrams.is_empty());
    for line in diagrams {
        assert!(line.starts_with("DIAGRAM "), "unexpected line: {line}");
    }
    assert_eq!(*last, format!("SUITE pass items={}", diagrams.len()));
}

#[test]
fn bad_usage_exits_with_code_2() {
    let out = run(&["accept"]); // missing arguments
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}
