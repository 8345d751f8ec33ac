use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn circinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circinv")).args(args).env_remove("CIRCINV_MAX_N").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let o = circinv(&a);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).expect("valid JSON"))
}

#[test]
fn factor_examples() {
    let o = circinv(&["factor", "6", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("lhs terms: 68\nrhs terms: 68\n"), "{out}");
    assert!(out.ends_with("verdict: pass\n"));

    let o = circinv(&["factor", "6", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let (code, v) = json(&["factor", "6", "4"]);
    assert_eq!(code, 2);
    assert_eq!(v["verdict"], "error");
    assert_eq!(v["details"]["error"], "NotADivisor");

    let out = stdout(&circinv(&["factor", "4", "2", "--emit-blocks"]));
    assert!(out.contains("block T(2,0) = x0^2 + 2*x0*x2 - x1^2 - 2*x1*x3 + x2^2 - x3^2\n"), "{out}");
    assert!(out.contains("block T(2,1) = x0^2 - 2*x0*x2 + x1^2 - 2*x1*x3 + x2^2 + x3^2\n"), "{out}");
}

#[test]
fn invariant_examples() {
    let o = circinv(&["invariant", "2", "x0^2 - x1^2", "--express"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("expression: T(2,0)\n"));

    let o = circinv(&["invariant", "2", "x0"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("invariant: false\n") && out.contains("witness: D f has term x1\n"), "{out}");

    let o = circinv(&["invariant", "30", "--gap-witness"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("monomial: y0*y1*y7*y13*y19*y20\n"), "{out}");
    assert!(out.contains("invariant: true\n") && out.contains("in R_n: false\n"), "{out}");

    let o = circinv(&["invariant", "6", "x0^6 + x1^6", "--sl"]);
    assert_eq!(o.status.code(), Some(1));

    let o = circinv(&["invariant", "3", "x0 + x1 + x2", "--sl"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));

    let o = circinv(&["invariant", "2", "x0 +* x1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn express_needs_two_primes_at_most() {
    let (code, v) = json(&["invariant", "30", "y0*y1*y7*y13*y19*y20", "--express"]);
    assert_eq!(code, 2);
    assert_eq!(v["details"]["error"], "TooManyPrimeFactors");
}

#[test]
fn kernel_examples() {
    let o = circinv(&["kernel", "6", "2", "3", "z0*z1*z2 - w0*w1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: InKernel\n"));

    let o = circinv(&["kernel", "6", "2", "3", "z0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness: y0*y3\n"), "{}", stdout(&o));

    let o = circinv(&["kernel", "12", "2", "3", "w0*w2 - z0*z2*z4", "--certificate"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("certificate: g0 = -1, g1 = 0\n") && out.contains("certificate verified: true\n"), "{out}");

    let (code, v) = json(&["kernel", "12", "2", "4", "z0"]);
    assert_eq!(code, 2);
    assert_eq!(v["details"]["error"], "NotCoprime");
}

#[test]
fn decompose_and_counterexample() {
    let o = circinv(&["decompose", "4", "1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("reconstruction exact: true\n"));

    let (code, v) = json(&["decompose", "4", "1,0,0,0"]);
    assert_eq!(code, 2);
    assert_eq!(v["details"]["error"], "NotInLattice");

    let o = circinv(&["counterexample", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("in V_n: true\n"));

    assert_eq!(circinv(&["counterexample", "12"]).status.code(), Some(2));
}

#[test]
fn guards() {
    assert_eq!(circinv(&["factor", "20", "2"]).status.code(), Some(3));
    assert_eq!(circinv(&["--max-n", "4", "factor", "6", "2"]).status.code(), Some(3));
    assert_eq!(circinv(&["--max-n", "20", "factor", "20", "10", "--basis", "y"]).status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_circinv"))
        .args(["factor", "6", "2"])
        .env("CIRCINV_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(circinv(&["verify-all", "31"]).status.code(), Some(3));
}

#[test]
fn verify_all() {
    let o = circinv(&["verify-all", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(!out.contains("FAIL"));
    let names: Vec<&str> =
        out.lines().filter_map(|l| l.strip_prefix("PASS ")).map(|l| l.split(':').next().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(out, stdout(&circinv(&["verify-all", "10"])));

    let (code, v) = json(&["verify-all", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "verify-all");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["params"]["n_max"], 10);
    assert_eq!(v["details"]["checks"].as_array().unwrap().len(), names.len());
    assert!(v["timings_ms"]["total"].as_f64().is_some());

    let o = circinv(&["verify-all", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn json_polynomials_are_exact() {
    let (code, v) = json(&["factor", "3", "3", "--emit-blocks"]);
    assert_eq!(code, 0);
    let terms = v["details"]["block_expansions"][0]["poly"]["terms"].as_array().unwrap();
    let first = &terms[0];
    assert_eq!(first["exponents"], serde_json::json!([3, 0, 0]));
    assert_eq!(first["coeff"]["num"], "1");
    assert_eq!(first["coeff"]["den"], "1");
    assert_eq!(first["coeff"]["zeta_coords"], serde_json::json!(["1", "0"]));

    let (code, v) = json(&["kernel", "6", "2", "3", "z0 - zeta*w0"]);
    assert_eq!(code, 1);
    let terms = v["details"]["image"]["terms"].as_array().unwrap();
    assert_eq!(terms[0]["exponents"], serde_json::json!([1, 0, 1, 0, 1, 0]));
    let coeff = &terms[0]["coeff"];
    assert!(coeff["num"].is_null() && coeff["den"].is_null(), "{v}");
    assert_eq!(coeff["zeta_coords"], serde_json::json!(["0", "-1"]));
}

#[test]
fn stdin_input_and_determinism() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_circinv"))
        .args(["invariant", "4", "-", "--express"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"y0*y2 + 3*y1*y3\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("invariant: true\n"), "{out}");
    assert!(out.contains("expression: "), "{out}");

    let a = stdout(&circinv(&["kernel", "18", "2", "3", "z0*z3*z6 - w0*w2 + z1"]));
    let b = stdout(&circinv(&["kernel", "18", "2", "3", "z0*z3*z6 - w0*w2 + z1"]));
    assert_eq!(a, b);
}
