use std::io::Write;
use std::process::Command;

use chi_config_cli::app::{
    EXIT_INPUT_ERROR, EXIT_OK, EXIT_RESOURCE_LIMIT, EXIT_VERIFICATION_FAILED,
};
use chi_config_cli::verify::{CheckResult, ComplexReport, Status, VerifyReport};
use chi_config_cli::{run, Outcome};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("chi-config").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).expect("machine output is JSON")
}

#[test]
fn eu_of_the_two_sphere() {
    let out = cli(&["eu", "--generate", "sphere", "2", "--order", "5"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("eu: (1+t)^2"), "{}", out.stdout);
    assert!(
        out.stdout.contains("chi: [1, 2, 2, 0, 0, 0]"),
        "{}",
        out.stdout
    );

    let out = cli(&[
        "eu",
        "--generate",
        "sphere",
        "2",
        "--order",
        "5",
        "--format",
        "machine",
    ]);
    let v = json(&out);
    assert_eq!(v["factors"], serde_json::json!([[1, 1], [1, 1]]));
    assert_eq!(v["chi"], serde_json::json!(["1", "2", "2", "0", "0", "0"]));
    assert_eq!(
        v["series"],
        serde_json::json!(["1", "2", "1", "0", "0", "0"])
    );
}

#[test]
fn chi_of_the_interval() {
    let out = cli(&[
        "chi",
        "--generate",
        "path",
        "1",
        "-n",
        "4",
        "--method",
        "theorem2",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "24\n");
}

#[test]
fn large_orders_stay_exact() {
    let out = cli(&["chi", "--generate", "path", "3", "-n", "25"]);
    assert_eq!(out.stdout, "15511210043330985984000000\n");
}

#[test]
fn methods_agree() {
    for (family, param, n) in [
        ("star", "3", "3"),
        ("sphere", "2", "2"),
        ("cycle", "4", "3"),
    ] {
        let values: Vec<Value> = ["theorem2", "recursion", "oracle"]
            .iter()
            .map(|m| {
                let out = cli(&[
                    "chi",
                    "--generate",
                    family,
                    param,
                    "-n",
                    n,
                    "--method",
                    m,
                    "--format",
                    "machine",
                ]);
                assert_eq!(out.code, EXIT_OK, "{family} {m}: {}", out.stderr);
                json(&out)["chi"].clone()
            })
            .collect();
        assert!(
            values.windows(2).all(|w| w[0] == w[1]),
            "{family}: {values:?}"
        );
    }
}

#[test]
fn oracle_output_is_labelled_heuristic() {
    let out = cli(&[
        "chi",
        "--generate",
        "path",
        "1",
        "-n",
        "3",
        "--method",
        "oracle",
    ]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("6\n"));
    assert!(out.stdout.contains("heuristic"));
}

#[test]
fn verify_corpus_passes() {
    let out = cli(&["verify", "--corpus", "--order", "8"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("all checks passed"));
    assert!(!out.stdout.contains("FAIL"));

    let out = cli(&["verify", "--corpus", "--order", "8", "--format", "machine"]);
    let v = json(&out);
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["complexes"].as_array().unwrap().len(), 6);
}

#[test]
fn machine_output_is_reproducible() {
    for args in [
        &[
            "info",
            "--generate",
            "torus",
            "3",
            "3",
            "--format",
            "machine",
        ][..],
        &["eu", "--generate", "star", "4", "--format", "machine"][..],
        &[
            "verify",
            "--generate",
            "cycle",
            "5",
            "--format",
            "machine",
            "--workers",
            "3",
        ][..],
    ] {
        let a = cli(args);
        let b = cli(args);
        assert_eq!(a, b);
        assert_eq!(a.code, EXIT_OK, "{}", a.stderr);
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let base = [
        "chi",
        "--generate",
        "sphere",
        "2",
        "-n",
        "2",
        "--method",
        "oracle",
        "--format",
        "machine",
    ];
    let outs: Vec<Outcome> = ["1", "2", "7"]
        .iter()
        .map(|w| {
            let mut args = base.to_vec();
            args.extend(["--workers", w]);
            cli(&args)
        })
        .collect();
    assert!(outs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn reads_documents_from_files() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"name": "Y", "facets": [[0, 1], [0, 2], [0, 3]]}}"#).unwrap();
    let path = f.path().to_str().unwrap();
    let out = cli(&["info", path]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("complex: Y"));
    assert!(out.stdout.contains("euler characteristic: 1"));
    let out = cli(&["chi", path, "-n", "3"]);
    assert_eq!(out.stdout, "-12\n");
}

#[test]
fn input_errors_exit_with_two() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "{{\"facets\": [[0, 0]]}}").unwrap();
    let out = cli(&["info", f.path().to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INPUT_ERROR);
    assert!(out.stderr.contains("malformed"), "{}", out.stderr);

    let mut g = tempfile::NamedTempFile::new().unwrap();
    write!(g, "{{\n\"facets\": [[0, 1]\n}}").unwrap();
    let out = cli(&["info", g.path().to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INPUT_ERROR);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);

    for args in [
        &["info", "/nonexistent/complex.json"][..],
        &["eu", "--generate", "klein", "1"][..],
        &["eu", "--generate", "cycle", "2"][..],
        &["eu", "--generate", "cycle", "x"][..],
        &["eu"][..],
        &["chi", "--generate", "point"][..],
        &["chi", "--generate", "point", "-n", "2", "--method", "magic"][..],
    ] {
        assert_eq!(cli(args).code, EXIT_INPUT_ERROR, "{args:?}");
    }
}

#[test]
fn resource_limits_exit_with_three() {
    let out = cli(&[
        "chi",
        "--generate",
        "sphere",
        "2",
        "-n",
        "3",
        "--method",
        "oracle",
        "--budget",
        "100",
    ]);
    assert_eq!(out.code, EXIT_RESOURCE_LIMIT, "{}", out.stderr);
    let out = cli(&[
        "chi",
        "--generate",
        "sphere",
        "2",
        "-n",
        "2",
        "--method",
        "recursion",
        "--cell-budget",
        "20",
    ]);
    assert_eq!(out.code, EXIT_RESOURCE_LIMIT, "{}", out.stderr);
    let out = cli(&[
        "chi",
        "--generate",
        "path",
        "1",
        "-n",
        "3",
        "--method",
        "oracle",
        "--subdivisions",
        "1",
    ]);
    assert_eq!(out.code, EXIT_RESOURCE_LIMIT, "{}", out.stderr);

    let out = cli(&["verify", "--generate", "sphere", "2", "--budget", "100"]);
    assert_eq!(out.code, EXIT_RESOURCE_LIMIT);
    assert!(out.stdout.contains("inconclusive"));
    assert!(!out.stdout.contains("FAIL"));
}

#[test]
fn failed_checks_exit_with_one() {
    let mut report = VerifyReport {
        order: 4,
        complexes: vec![ComplexReport {
            name: "x".into(),
            checks: vec![
                CheckResult {
                    check: "a".into(),
                    status: Status::Pass,
                    detail: String::new(),
                },
                CheckResult {
                    check: "b".into(),
                    status: Status::Inconclusive,
                    detail: String::new(),
                },
            ],
        }],
        passed: false,
    };
    assert_eq!(report.exit_code(), EXIT_RESOURCE_LIMIT);
    report.complexes[0].checks[0].status = Status::Fail;
    assert_eq!(report.exit_code(), EXIT_VERIFICATION_FAILED);
}

#[test]
fn help_lists_defaults() {
    let out = cli(&["chi", "--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(
        out.stdout.contains("[default: 100000000]"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("[default: 200000]"));
    let out = cli(&["eu", "--help"]);
    assert!(out.stdout.contains("[default: 10]"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_chi-config");
    let status = Command::new(bin)
        .args(["verify", "--corpus", "--order", "8"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    let status = Command::new(bin)
        .args(["eu", "--generate", "nope"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_INPUT_ERROR));
    let out = Command::new(bin)
        .args(["eu", "--generate", "path", "2", "--order", "3"])
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "complex: path 2\neu: (1-t)^-1\nseries: [1, 1, 1, 1]\nchi: [1, 1, 2, 6]\n"
    );
}
