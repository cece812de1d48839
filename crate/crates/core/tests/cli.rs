use std::fs;
use std::path::Path;

use negabent::cli::{run, FunctionFile, EXIT_PARSE, EXIT_SPEC, EXIT_VERIFICATION};
use negabent::oracle::VerificationReport;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("negabent").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn gen_to(path: &Path, family_args: &[&str]) {
    let p = path.to_str().unwrap();
    let mut args = vec!["gen", "--out", p];
    args.extend_from_slice(family_args);
    let (code, _, err) = run_args(&args);
    assert_eq!(code, 0, "{family_args:?}: {err}");
}

const SMALLEST: &[&[&str]] = &[
    &["--family", "g4k", "--k", "1", "--gamma", "01,10"],
    &["--family", "g8k", "--k", "1", "--gamma", "0000,0001"],
    &["--family", "h4k2", "--k", "1", "--gamma", "00,11", "--eset", "1,B"],
    &["--family", "h8k2", "--k", "1", "--gamma", "0001", "--eset", "0"],
    &["--family", "f2rs", "--k", "1", "--p", "10"],
    &["--family", "f2rs-set", "--k", "1", "--a-set", "00,11"],
    &["--family", "f2rs-orbit", "--k", "1", "--single-gamma", "11"],
];

#[test]
fn gen_then_verify_every_family() {
    let dir = tempfile::tempdir().unwrap();
    for (i, args) in SMALLEST.iter().enumerate() {
        let path = dir.path().join(format!("f{i}.json"));
        gen_to(&path, args);
        let (code, out, err) = run_args(&["--format", "json", "verify", "--in", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{args:?}: {out}{err}");
        let report: VerificationReport = serde_json::from_str(&out).unwrap();
        assert!(report.passed());
        assert!(report.check("file_anf").is_some());
    }
}

#[test]
fn corrupted_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    gen_to(&path, &["--family", "g4k", "--k", "2", "--gamma", "0001"]);
    let mut file: FunctionFile = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let mut f = file.function().unwrap();
    f.flip(17);
    file.tt_hex = f.to_hex();
    fs::write(&path, file.to_json()).unwrap();

    let (code, out, _) = run_args(&["--format", "json", "verify", "--in", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_VERIFICATION);
    let report: VerificationReport = serde_json::from_str(&out).unwrap();
    let bent = report.check("bent").unwrap();
    assert!(!bent.pass);
    assert!(bent.counterexample.is_some());
    assert!(!report.check("anf_consistency").unwrap().pass);
    assert!(!report.check("file_anf").unwrap().pass);
}

#[test]
fn mismatched_file_is_a_spec_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    gen_to(&path, &["--family", "g4k", "--k", "1", "--gamma", "01"]);
    let text = fs::read_to_string(&path).unwrap().replace("\"k\": 1", "\"k\": 2");
    fs::write(&path, text).unwrap();
    let (code, _, err) = run_args(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_SPEC, "{err}");

    fs::write(&path, "{ not json").unwrap();
    let (code, _, err) = run_args(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.starts_with("error[parse]"));
}

#[test]
fn identical_requests_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = ["--family", "h4k2", "--k", "2", "--gamma", "1000,0101", "--eset", "1,B"];
    gen_to(&a, &args);
    gen_to(&b, &args);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let s1 = dir.path().join("s1.txt");
    let s2 = dir.path().join("s2.txt");
    for s in [&s1, &s2] {
        let (code, _, _) = run_args(&["spectrum", "--kind", "nega", "--in", a.to_str().unwrap(), "--out", s.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    assert_eq!(fs::read(&s1).unwrap(), fs::read(&s2).unwrap());
    assert_eq!(fs::read_to_string(&s1).unwrap().lines().count(), 1024);
}

#[test]
fn example_one_from_the_command_line() {
    let (code, out, _) = run_args(&["gen", "--family", "g4k", "--k", "2", "--gamma", "0001"]);
    assert_eq!(code, 0);
    let file: FunctionFile = serde_json::from_str(&out).unwrap();
    assert_eq!(file.n, 8);
    assert_eq!(file.anf.split(" + ").count(), 56);
    assert_eq!(file.predicts_max_degree, Some(true));
}

#[test]
fn spectrum_of_plain_table() {
    let (code, out, _) = run_args(&["spectrum", "--tt", "8", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0\t2\n1\t2\n2\t2\n3\t-2\n");
    let (code, out, _) = run_args(&["verify", "--tt", "8", "--n", "2"]);
    assert_eq!(code, EXIT_VERIFICATION);
    assert!(out.contains("negabent"));
}
