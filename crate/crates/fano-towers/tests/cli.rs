//! Black-box tests of the `fano-towers` binary: golden output bytes,
//! the exit-code contract, and byte-for-byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fano-towers"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn tmp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("fano-towers-bin-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn construct_json_is_the_exact_exchange_format() {
    let out = run(&["construct", "high-picard", "-n", "8", "-k", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"base_dim\":4,\"levels\":[{\"r\":3,\"c\":1},{\"r\":1,\"c\":2}]}\n"
    );
}

#[test]
fn degree_from_a_spec_file_prints_the_exact_integer_first() {
    let path = tmp_file("p4.json", r#"{"base_dim":4,"levels":[]}"#);
    let out = run(&["degree", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("625"));
}

#[test]
fn construct_output_round_trips_through_degree() {
    let constructed = run(&["construct", "high-picard", "-n", "16", "-k", "4", "--json"]);
    assert_eq!(constructed.status.code(), Some(0));
    let path = tmp_file("round-trip-16-4.json", stdout(&constructed).trim());

    let via_file = run(&["degree", "--spec", path.to_str().unwrap()]);
    let via_family = run(&["degree", "high-picard", "-n", "16", "-k", "4"]);
    assert_eq!(via_file.status.code(), Some(0));
    assert_eq!(stdout(&via_file), stdout(&via_family));
    assert_eq!(
        stdout(&via_file).lines().next(),
        Some("141369071684668991078400")
    );
}

#[test]
fn invalid_inputs_exit_two() {
    // construction outside its domain
    let out = run(&["construct", "high-picard", "-n", "4", "-k", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed JSON
    let path = tmp_file("broken.json", "{\"base_dim\": 4,");
    let out = run(&["degree", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // schema violation: unknown key
    let path = tmp_file(
        "unknown.json",
        r#"{"base_dim":4,"levels":[],"surprise":true}"#,
    );
    let out = run(&["degree", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // admissibility violation: twist too large for the Fano condition
    let path = tmp_file("not-fano.json", r#"{"base_dim":2,"levels":[{"r":1,"c":5}]}"#);
    let out = run(&["degree", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // base dimension outside the schema
    let path = tmp_file("base-zero.json", r#"{"base_dim":0,"levels":[]}"#);
    let out = run(&["degree", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // unknown flags are a usage error
    let out = run(&["degree", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verified_sweeps_exit_zero() {
    let out = run(&["verify", "high-degree", "--from", "3", "--to", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("summary: 10 checked, 10 hold, 0 fail, 0 undecided"));
}

#[test]
fn certified_false_rows_exit_one() {
    // at (4, 2) two analytic rows of the descent chain are honestly false
    let out = run(&["verify", "chain", "-n", "4", "-k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[FAILS]"));

    // at a comfortably large dimension the whole chain certifies
    let out = run(&["verify", "chain", "-n", "200", "-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn precision_cap_exits_three() {
    let out = run(&["verify", "thresholds", "--precision-cap", "8"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn ratio_csv_has_the_fixed_header() {
    let out = run(&["search", "ratio-table", "--n-list", "3,10", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,r_star,a_star,degree_digits,delta_lo,delta_hi,ratio_lo,ratio_hi")
    );
    assert_eq!(lines.clone().count(), 2);
    assert!(lines.next().unwrap().starts_with("3,0,3,2,"));
}

#[test]
fn output_is_byte_deterministic_without_timings() {
    let args = [
        "verify",
        "high-degree",
        "--from",
        "3",
        "--to",
        "8",
        "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "same flags, same bytes");
    assert!(
        !stdout(&a).contains("timing_ms"),
        "timings only appear when requested"
    );

    let timed = bin()
        .args(["verify", "high-degree", "--from", "3", "--to", "8", "--json", "--timings"])
        .output()
        .expect("binary runs");
    assert!(stdout(&timed).contains("\"timing_ms\""));
}

#[test]
fn oracle_cross_checks_and_exits_zero() {
    let out = run(&["oracle", "high-picard", "-n", "8", "-k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("chow ring: 83128320"));
    assert!(text.contains("agree"));
}

#[test]
fn verify_thresholds_reports_both_crossovers() {
    let out = run(&["verify", "thresholds"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n = 226"));
    assert!(text.contains("n = 27"));
}

#[test]
fn batch_tables_emit_line_delimited_json() {
    let out = run(&["table", "families", "--from", "3", "--to", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut kinds = 0;
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("every line is JSON");
        assert_eq!(v["kind"], "invariants");
        assert!(v["params"]["family"].is_string());
        kinds += 1;
    }
    // projective + classical at 3..=5, high-degree at 3..=5, high-index at 4..=5
    assert_eq!(kinds, 3 + 3 + 3 + 2);

    let out = run(&["table", "upper-bounds", "--n-list", "2,3", "--iota", "4"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("every line is JSON");
        assert_eq!(v["kind"], "upper-bound");
    }
}

#[test]
fn help_and_version_exit_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
}
