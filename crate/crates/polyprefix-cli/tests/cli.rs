//! End-to-end tests of the `polyprefix` binary: exit codes, output formats,
//! the frozen search snapshot, and rendering round trips.

use std::process::{Command, Output};

use polyprefix::polymorphism::verify;
use polyprefix::radix::{from_digits, DigitString};
use polyprefix::Nat;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyprefix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn verify_accepts_the_decimal_square() {
    let out = run(&["verify", "5", "2", "10"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("verdict: true"));
    assert!(text.contains("rendered: 5_10^2 = 25_10"));
}

#[test]
fn verify_reports_the_binary_near_miss() {
    let out = run(&["verify", "2", "3", "2"]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("equation_holds: true"));
    assert!(text.contains("digit_count_holds: false"));
    assert!(text.contains("verdict: false"));
}

#[test]
fn verify_rejects_zero_arguments() {
    let out = run(&["verify", "0", "2", "10"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("positive"));
}

#[test]
fn verify_accepts_an_explicit_digit_count() {
    let out = run(&["verify", "9", "2", "6", "2"]);
    assert_eq!(exit_code(&out), 0);
    let out = run(&["verify", "9", "2", "6", "1"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn verify_rejects_garbage_numbers() {
    let out = run(&["verify", "five", "2", "10"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn solve_finds_and_misses() {
    let out = run(&["solve", "--base", "6", "--exp", "5"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("(2, 5, 6, 1)"));

    let out = run(&["solve", "--base", "7", "--exp", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "no solution");

    let out = run(&["solve", "--base", "1", "--exp", "2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn solve_emits_an_empty_json_array_for_a_miss() {
    let out = run(&["solve", "--base", "7", "--exp", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed, serde_json::json!([]));
}

#[test]
fn enumerate_triangular_and_pell_counts() {
    let out = run(&["enumerate", "--class", "triangular", "--count", "2"]);
    let text = stdout(&out);
    assert!(text.contains("(4, 2, 6, 1)"));
    assert!(text.contains("(5, 2, 10, 1)"));
    assert_eq!(text.lines().count(), 2);

    let out = run(&["enumerate", "--class", "pell", "--count", "2"]);
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().contains("(9, 2, 6, 2)"));
    assert!(text.lines().nth(1).unwrap().contains("(50, 2, 35, 2)"));
}

#[test]
fn enumerate_fermat_rectangle_in_lexicographic_order() {
    let out = run(&[
        "enumerate", "--class", "fermat", "--t-max", "3", "--n-max", "5", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let quads: Vec<(String, String)> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["x"].as_str().unwrap().to_string(),
                r["n"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        quads,
        vec![
            ("3".into(), "3".into()),
            ("2".into(), "5".into()),
            ("3".into(), "5".into()),
        ]
    );
}

#[test]
fn enumerate_prime_family_skips_composite_exponents() {
    let out = run(&[
        "enumerate", "--class", "prime-family", "--t-max", "2", "--n-max", "9", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let exponents: Vec<&str> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["n"].as_str().unwrap())
        .collect();
    // n = 3 is the excluded case for t = 2; 9 is composite; so 5 and 7 remain.
    assert_eq!(exponents, vec!["5", "7"]);
}

#[test]
fn enumerate_rejects_malformed_requests() {
    for args in [
        &["enumerate", "--class", "triangular"][..],
        &["enumerate", "--class", "triangular", "--count", "0"][..],
        &["enumerate", "--class", "triangular", "--t-max", "5"][..],
        &["enumerate", "--class", "fermat", "--t-max", "5"][..],
        &["enumerate", "--class", "fermat", "--count", "3"][..],
        &["enumerate", "--class", "sporadic", "--count", "3"][..],
    ] {
        let out = run(args);
        assert_eq!(exit_code(&out), 2, "args: {args:?}");
    }
}

#[test]
fn search_small_bounds_match_the_known_solutions() {
    let out = run(&["search", "--x-max", "5", "--n-max", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("solutions: 5"));
    assert!(text.contains("violations: 0"));

    let out = run(&["search", "--x-max", "2", "--n-max", "2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("solutions: 0"));
}

#[test]
fn search_rejects_malformed_bounds() {
    let out = run(&["search", "--x-max", "1", "--n-max", "2"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["search", "--x-max", "5", "--n-max", "3", "--workers", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn search_json_matches_the_frozen_snapshot() {
    let out = run(&["search", "--x-max", "100", "--n-max", "8", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let expected = include_str!("snapshots/search_100_8.json");
    assert_eq!(stdout(&out), expected);
}

#[test]
fn search_json_records_reverify_through_the_library() {
    let out = run(&["search", "--x-max", "60", "--n-max", "6", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = parsed.as_array().unwrap();
    assert!(!records.is_empty());
    for r in records {
        let x: Nat = r["x"].as_str().unwrap().parse().unwrap();
        let n: Nat = r["n"].as_str().unwrap().parse().unwrap();
        let base: Nat = r["B"].as_str().unwrap().parse().unwrap();
        let k = Nat::from(r["k"].as_u64().unwrap());
        assert!(verify(&x, &n, &base, &k).verdict(), "record {r}");
    }
}

#[test]
fn csv_has_the_fixed_column_order_and_lf_endings() {
    let out = run(&["search", "--x-max", "9", "--n-max", "2", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.lines().next().unwrap() == "x,n,B,k,class,rendered");
    assert!(!text.contains('\r'));

    // Header alone when there is nothing to report.
    let out = run(&["search", "--x-max", "2", "--n-max", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "x,n,B,k,class,rendered\n");
}

#[test]
fn rendered_numerals_parse_back_to_the_right_values() {
    let out = run(&["search", "--x-max", "60", "--n-max", "6", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for r in parsed.as_array().unwrap() {
        let x: Nat = r["x"].as_str().unwrap().parse().unwrap();
        let n: Nat = r["n"].as_str().unwrap().parse().unwrap();
        let base: Nat = r["B"].as_str().unwrap().parse().unwrap();
        let rendered = r["rendered"].as_str().unwrap();

        let (lhs, rhs) = rendered.split_once(" = ").unwrap();
        let (x_part, n_part) = lhs.rsplit_once('^').unwrap();
        assert_eq!(n_part.parse::<Nat>().unwrap(), n);
        assert_eq!(parse_numeral(x_part), (x.clone(), base.clone()));
        let (power, rhs_base) = parse_numeral(rhs);
        assert_eq!(rhs_base, base);
        assert_eq!(power, polyprefix::intarith::ipow(&x, &n));
    }
}

/// Parses `"213_6"`, `"1f_35"`, or `"[1,85]_204"` back into (value, base).
fn parse_numeral(text: &str) -> (Nat, Nat) {
    let (digits_part, base_part) = text.rsplit_once('_').unwrap();
    let base: Nat = base_part.parse().unwrap();
    let digits: Vec<Nat> = if let Some(inner) = digits_part
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
    {
        inner.split(',').map(|d| d.parse().unwrap()).collect()
    } else {
        digits_part
            .chars()
            .map(|c| Nat::from(c.to_digit(36).unwrap()))
            .collect()
    };
    let numeral = DigitString::new(base.clone(), digits).unwrap();
    (from_digits(&numeral), base)
}

#[test]
fn format_flag_is_accepted_before_and_after_the_subcommand() {
    let before = run(&["--format", "json", "solve", "--base", "10", "--exp", "2"]);
    let after = run(&["solve", "--base", "10", "--exp", "2", "--format", "json"]);
    assert_eq!(exit_code(&before), 0);
    assert_eq!(stdout(&before), stdout(&after));
}
