use std::process::{Command, Output};

use sumzero_core::reference::{strip_whitespace, FN0_ROWS, FN_ROWS};
use sumzero_core::{class_fn, class_fn0, IntPoly, Var};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumzero"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn latex_table_matches_reference_rows() {
    for (space, rows) in [("fn", &FN_ROWS), ("fn0", &FN0_ROWS)] {
        let text = stdout(&[
            "table", "--space", space, "--n", "2..8", "--format", "latex",
        ]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 7);
        for (line, (_, want)) in lines.iter().zip(rows.iter()) {
            assert_eq!(strip_whitespace(line), strip_whitespace(want));
        }
    }
    let text = stdout(&[
        "table", "--space", "fn0", "--n", "2..8", "--format", "latex",
    ]);
    assert!(strip_whitespace(text.lines().next().unwrap()).contains("$E-4$"));
}

#[test]
fn table_plain_and_json() {
    assert_eq!(
        stdout(&["table", "--space", "fn0", "--n", "6", "--format", "plain"]),
        "E^5 - 15E^4 + 85E^3 - 270E^2 + 864E - 4320\n"
    );
    assert_eq!(
        stdout(&["table", "--space", "fn", "--n", "1", "--format", "json"]),
        "{\"n\":1,\"space\":\"fn\",\"coeffs\":[\"0\",\"1\"]}\n"
    );
    assert_eq!(
        stdout(&["table", "--space", "fn0", "--n", "5", "--format", "csv"]),
        "5,4,600,-50,35,-10,1\n"
    );
}

#[test]
fn json_rows_reparse() {
    for (space, class) in [("fn", class_fn as fn(usize) -> _), ("fn0", class_fn0)] {
        let text = stdout(&[
            "table", "--space", space, "--n", "1..20", "--format", "json",
        ]);
        for (i, line) in text.lines().enumerate() {
            let n = i + 1;
            assert!(line.starts_with(&format!("{{\"n\":{n},\"space\":\"{space}\"")));
            let start = line.find("\"coeffs\":").unwrap() + "\"coeffs\":".len();
            let array = &line[start..line.len() - 1];
            let want = class(n).unwrap().poly;
            assert_eq!(IntPoly::parse_json(want.var(), array).unwrap(), want);
        }
    }
}

#[test]
fn stirling_rows() {
    assert_eq!(
        stdout(&["stirling", "--kind", "sm", "--n", "4"]),
        "96, 20, 6, 1\n"
    );
    assert_eq!(
        stdout(&["stirling", "--kind", "s", "--n", "3"]),
        "2, 3, 1\n"
    );
    assert_eq!(stdout(&["stirling", "--kind", "s", "--n", "1"]), "1\n");
    assert_eq!(
        stdout(&["stirling", "--kind", "s", "--n", "1..3", "--format", "csv"]),
        "1,1\n2,1,1\n3,2,3,1\n"
    );
    assert_eq!(
        stdout(&["stirling", "--kind", "sm", "--n", "2", "--format", "json"]),
        "{\"n\":2,\"kind\":\"sm\",\"values\":[\"4\",\"1\"]}\n"
    );
}

#[test]
fn poincare_polynomials() {
    assert_eq!(
        stdout(&["poincare", "--space", "fn0", "--n", "2"]),
        "x^2 + 2x - 3\n"
    );
    assert_eq!(
        stdout(&["poincare", "--space", "fn", "--n", "1", "--sx", "[1,2,1]"]),
        "x^2 + 2x + 1\n"
    );
    assert_eq!(stdout(&["poincare", "--space", "fn0", "--n", "1"]), "1\n");
    assert_eq!(
        stdout(&["poincare", "--space", "fn", "--n", "3", "--sx", "[1,0,1]"]),
        "x^6 - x^2\n"
    );
    let sx = IntPoly::from_i64s(Var::Lower, &[1, 2, 1]);
    let want = class_fn0(5).unwrap().poly.compose(&sx);
    assert_eq!(
        stdout(&["poincare", "--space", "fn0", "--n", "5", "--format", "json"]).trim(),
        format!(
            "{{\"n\":5,\"space\":\"fn0\",\"coeffs\":[{}]}}",
            want.coeffs()
                .iter()
                .map(|c| format!("\"{c}\""))
                .collect::<Vec<_>>()
                .join(",")
        )
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["poincare", "--space", "fn0", "--n", "2", "--sx", "[1,x]"][..],
        &["poincare", "--space", "fn0", "--n", "2", "--sx", "{}"],
        &["table", "--space", "fn", "--n", "0..3"],
        &["table", "--space", "fn", "--n", "5..3"],
        &["table", "--space", "fn", "--n", "9", "--n-max", "8"],
        &["table", "--space", "nope", "--n", "2"],
        &["stirling", "--kind", "s"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--space", "fn0", "--n", "1..12", "--format", "csv"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    assert!(text.contains("PASS table parity [F_n(E)]"));
    assert!(text.contains("PASS table parity [F_n^0(E)]"));
}

#[test]
fn verify_zero_budget_skips_oracles() {
    let out = run(&["verify", "--oracle-budget", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let skipped: Vec<&str> = text.lines().filter(|l| l.starts_with("SKIP ")).collect();
    assert_eq!(skipped.len(), 3, "{text}");
    assert!(skipped
        .iter()
        .all(|l| l.contains("oracle") || l.contains("torsion")));
    assert!(!text.contains("FAIL"));
}
