mod common;

use newform::cli::{run_command, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use newform::scalar::parse_rational_list;
use newform::symfunc::dominant_signatures;
use newform::whittaker::whittaker_value;
use newform::{LaurentScalar, SatakeParams, Signature};
use serde_json::Value;

fn run(args: &str) -> newform::cli::Outcome {
    run_command(std::iter::once("newform").chain(args.split_whitespace()))
}

#[test]
fn eval_examples() {
    let out = run("eval --n 3 --alpha 1/2,1/3,0 --f 2,1");
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "5/36*v^-4\n"));
    let out = run("eval --n 3 --alpha 1/2,1/3,0 --f 0,1");
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "0\n"));
    let out = run("eval --n 3 --alpha -1/2,1/3,0 --f -1,0");
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "0\n"));
}

#[test]
fn eval_json_and_numeric() {
    let out = run("eval --n 3 --alpha 1/2,1/3,0 --f 2,1 --format json --q 4");
    assert_eq!(out.code, EXIT_OK);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["value"]["-4"], "5/36");
    assert_eq!(v["value_text"], "5/36*v^-4");
    let x = v["numeric"].as_f64().unwrap();
    assert!((x - 5.0 / 36.0 / 16.0).abs() < 1e-15);
}

#[test]
fn zeta_check_ok() {
    let out = run("zeta-check --n 3 --alpha 1/2,1/3,0 --terms 30");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "OK: coefficients agree to order 30\n");
}

#[test]
fn usage_errors() {
    for args in [
        "eval --n 3 --alpha 1/2,1/3 --f 2,1",
        "eval --n 3 --alpha 1/2,x,0 --f 2,1",
        "eval --n 3 --alpha 1/2,1/3,0 --f 2",
        "eval --n 3 --alpha 1/2,1/3,0 --f 2,a",
        "eval --n 3 --alpha 1/2,1/3,0",
        "table --n 3 --alpha 1/2,1/3,0 --max-weight 2 --format yaml",
        "table --n 3 --alpha 1/2,1/3,0 --max-weight 2 --q 1",
        "coset-verify --n 3 --p 4 --i 1",
        "coset-verify --n 3 --p 2 --i 3",
        "frobnicate",
    ] {
        let out = run(args);
        assert_eq!(out.code, EXIT_USAGE, "{args}: {out:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_is_not_an_error() {
    let out = run("--help");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("zeta-check"));
}

#[test]
fn table_examples() {
    let out = run("table --n 2 --alpha 1/2,0 --max-weight 2 --format csv");
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines, [
        "signature,schur,delta_exponent,value",
        "(0),1,0,1",
        "(1),1/2,-1,1/2*v^-1",
        "(2),1/4,-2,1/4*v^-2",
    ]);

    let out = run("table --n 3 --alpha 0,0,0 --max-weight 1 --format csv");
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines, ["signature,schur,delta_exponent,value", "\"(0,0)\",1,0,1", "\"(1,0)\",0,-2,0"]);

    let out = run("table --n 4 --alpha 1,2,3,0 --max-weight 0 --format json");
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["value_text"], "1");
}

#[test]
fn table_json_roundtrip() {
    let out = run("table --n 4 --alpha -1/2,1/3,5/7,0 --max-weight 5 --format json --q 9");
    assert_eq!(out.code, EXIT_OK);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let alphas: Vec<String> = v["alpha"].as_array().unwrap().iter().map(|a| a.as_str().unwrap().to_string()).collect();
    let alpha = SatakeParams::new(parse_rational_list(&alphas.join(",")).unwrap()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), dominant_signatures(4, 5).len());
    for row in rows {
        let parts: Vec<i64> = row["signature"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
        let w = whittaker_value(&Signature::new(parts), &alpha).unwrap();
        let from_map: LaurentScalar = serde_json::from_value(row["value"].clone()).unwrap();
        let from_text: LaurentScalar = row["value_text"].as_str().unwrap().parse().unwrap();
        assert_eq!(from_map, w);
        assert_eq!(from_text, w);
        assert_eq!(row["value_text"].as_str().unwrap(), w.to_string());
    }
}

#[test]
fn eigen_and_lfactor() {
    let out = run("eigen --n 3 --alpha 1/2,1/3,0");
    assert_eq!(out.stdout, "lambda_1 = 5/6*v^2\nlambda_2 = 1/6*v^2\n");
    let out = run("lfactor --n 3 --alpha 1/2,1/3,0 --terms 2");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.stdout,
        "denominator: 1 - 5/6*X + 1/6*X^2\nfrom eigenvalues: 1 - 5/6*X + 1/6*X^2\nseries: 1 + 5/6*X + 19/36*X^2 + O(X^3)\n"
    );
    let out = run("lfactor --n 2 --alpha 1/2,1/3 --terms 1 --format json");
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["denominator_from_eigenvalues"], Value::Null);
    assert_eq!(v["series"][1], "5/6");
}

#[test]
fn checks_pass_and_fail() {
    assert_eq!(run("recursion-check --n 4 --alpha 1/2,-1/3,2,0 --max-weight 3").code, EXIT_OK);
    assert_eq!(run("solve-check --n 3 --alpha 1/2,1/3,0 --max-weight 4").code, EXIT_OK);
    // unramified parameters do not satisfy the positive-conductor recursion
    let out = run("recursion-check --n 2 --alpha 1/2,1/3 --max-weight 3");
    assert_eq!(out.code, EXIT_FAILED);
    assert!(out.stdout.contains("FAIL"));
    assert_eq!(run("solve-check --n 2 --alpha 1/2,1/3 --max-weight 3").code, EXIT_FAILED);
    // zeta = L holds in both cases
    assert_eq!(run("zeta-check --n 2 --alpha 1/2,1/3 --terms 20").code, EXIT_OK);
}

#[test]
fn coset_verify_small() {
    let out = run("coset-verify --n 2 --p 2 --i 1");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("OK: 2 representatives"));
    let out = run("coset-verify --n 3 --p 2 --i 1 --format json");
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["representatives"].as_array().unwrap().len(), 6);
    assert_eq!(v["coverage_ok"], true);
}
