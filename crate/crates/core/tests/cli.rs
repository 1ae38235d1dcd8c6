use std::process::{Command, Output};

use confluent::expr::parse_laurent;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confluent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

#[test]
fn poly_renders_each_format() {
    let out = run(&["poly", "--family", "dual-q-hahn", "--n", "-1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "z^-1 + a*b*c - a - b");

    let out = run(&["poly", "--family", "q-hermite", "--n", "0"]);
    assert_eq!(stdout(&out), "1");

    let out = run(&["poly", "--family", "big-q-hermite", "--n", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["family"], "big-q-hermite");
    assert_eq!(v["n"], 1);
    let poly = parse_laurent(&v["poly"].to_string()).unwrap();
    assert_eq!(poly, parse_laurent("z + q*z^-1 - q*a").unwrap());

    let out = run(&["poly", "--family", "big-q-hermite", "--n", "1", "--format", "latex"]);
    assert_eq!(stdout(&out), "q z^{-1} - q a + z");
}

#[test]
fn poly_rejects_bad_flags() {
    assert_eq!(run(&["poly", "--family", "hahn", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "--family", "q-hermite"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "--n", "1", "--family", "q-hermite", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn apply_evaluates_words() {
    let cases = [
        (["--algebra", "v", "--word", "T1", "--input", "1"], "-a*b"),
        (["--algebra", "iii-d7", "--word", "T1", "--input", "z"], "z^-1 - a"),
        (["--algebra", "v", "--word", "T0*T0 + T0", "--input", "z^3"], "0"),
    ];
    for (args, expected) in cases {
        let mut full = vec!["apply"];
        full.extend(args);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out), expected, "{args:?}");
    }
}

#[test]
fn poly_then_apply_identity_round_trips() {
    let poly = run(&["poly", "--family", "al-salam-chihara", "--n", "2"]);
    let text = stdout(&poly);
    let out = run(&["apply", "--algebra", "iii", "--word", "1", "--input", &text]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), text);

    let poly = run(&["poly", "--family", "al-salam-chihara", "--n", "-2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&poly)).unwrap();
    let input = v["poly"].to_string();
    let out = run(&["apply", "--algebra", "iii", "--word", "1", "--input", &input, "--format", "json"]);
    let back: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(back, v["poly"]);
}

#[test]
fn apply_parse_errors_exit_2() {
    let out = run(&["apply", "--algebra", "v", "--word", "T0*", "--input", "z"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = run(&["apply", "--algebra", "v", "--word", "T7", "--input", "z"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["apply", "--algebra", "v", "--word", "T0", "--input", "1/(1 - z)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--algebra", "v", "--suite", "relations", "--nmax", "5", "--mode", "symbolic"]);
    assert_eq!(ok.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&ok)).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["config"]["mode"], "symbolic");

    let random = run(&[
        "verify", "--algebra", "iii", "--suite", "eigen", "--nmax", "8", "--mode", "random", "--seed", "7",
        "--trials", "3",
    ]);
    assert_eq!(random.status.code(), Some(0));

    let d8 = run(&["verify", "--algebra", "iii-d8", "--suite", "actions", "--nmax", "8", "--mode", "symbolic"]);
    assert_eq!(d8.status.code(), Some(0));

    let usage = run(&["verify", "--algebra", "v", "--suite", "relations", "--seed", "1"]);
    assert_eq!(usage.status.code(), Some(2));
    let inapplicable = run(&["verify", "--algebra", "iii-d7", "--suite", "bz"]);
    assert_eq!(inapplicable.status.code(), Some(2));
    let unknown = run(&["verify", "--algebra", "v", "--suite", "everything"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn verify_output_is_deterministic() {
    let args = [
        "verify", "--algebra", "iii", "--suite", "relations,eta", "--nmax", "4", "--mode", "random", "--seed", "11",
        "--trials", "2",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn table_lists_extreme_coefficients() {
    let out = run(&["table", "--family", "dual-q-hahn", "--nmax", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    let row = |idx: i64| rows.iter().find(|r| r["index"] == idx).unwrap().clone();
    assert_eq!(row(-2)["high_exp"], 1);
    assert_eq!(row(-2)["high_coeff"], "q*a*b*c - a - b");
    assert_eq!(row(3)["low_exp"], -3);
    assert_eq!(row(3)["low_coeff"], "q^3");

    let out = run(&["table", "--family", "q-hermite", "--nmax", "2", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    let e_minus_2 = rows.iter().find(|r| r["index"] == -2).unwrap();
    assert_eq!(e_minus_2["high_exp"], 1);
    assert_eq!(e_minus_2["high_coeff"], "0");

    assert_eq!(run(&["table", "--family", "q-hermite", "--nmax", "0"]).status.code(), Some(2));
}
