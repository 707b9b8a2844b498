//! The `verify` command: identity checks and three-way agreement of
//! `χ_n` on one complex or the built-in corpus.

use std::fmt::Write as _;

use chi_config::euler;
use chi_config::oracle;
use chi_config::{Error, SimplicialComplex};
use num_bigint::BigInt;
use serde::Serialize;

use crate::app::{Format, Limits, Outcome, EXIT_OK, EXIT_RESOURCE_LIMIT, EXIT_VERIFICATION_FAILED};

/// Subdivision depth used by the invariance check.
const SUBDIVISION_DEPTH: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A limit was hit before the check could decide.
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexReport {
    pub name: String,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub order: usize,
    pub complexes: Vec<ComplexReport>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        let statuses = || {
            self.complexes
                .iter()
                .flat_map(|c| &c.checks)
                .map(|c| c.status)
        };
        if statuses().any(|s| s == Status::Fail) {
            EXIT_VERIFICATION_FAILED
        } else if statuses().any(|s| s == Status::Inconclusive) {
            EXIT_RESOURCE_LIMIT
        } else {
            EXIT_OK
        }
    }
}

fn check(name: impl Into<String>, holds: bool, detail: String) -> CheckResult {
    CheckResult {
        check: name.into(),
        status: if holds { Status::Pass } else { Status::Fail },
        detail,
    }
}

fn limited(name: impl Into<String>, err: &Error) -> CheckResult {
    CheckResult {
        check: name.into(),
        status: Status::Inconclusive,
        detail: err.to_string(),
    }
}

fn default_max_n(x: &SimplicialComplex) -> usize {
    if x.dim().unwrap_or(0) <= 1 {
        3
    } else {
        2
    }
}

/// Runs every check on `x`.
pub fn verify_complex(
    x: &SimplicialComplex,
    order: usize,
    max_n: Option<usize>,
    limits: &Limits,
) -> ComplexReport {
    let mut checks = Vec::new();

    let measure = euler::total_measure(x);
    checks.push(check(
        "total measure = euler characteristic",
        measure == x.euler_char(),
        format!("{measure} vs {}", x.euler_char()),
    ));

    let sd = euler::verify_subdivision_invariance_to_depth(x, order, SUBDIVISION_DEPTH);
    checks.push(check(
        "subdivision invariance",
        sd.holds,
        format!(
            "{} raw factors per level {:?}",
            sd.factored[0],
            sd.raw_factors.iter().map(Vec::len).collect::<Vec<_>>()
        ),
    ));

    if !x.is_empty() {
        let cone = euler::verify_cone_identity(x, order);
        checks.push(check(
            "cone / cylinder ratio",
            cone.holds,
            format!("ratio {}", cone.ratio),
        ));
    }

    let point = chi_config::families::simplex(0);
    for (other_name, other) in [("point", &point), ("itself", x)] {
        let r = euler::verify_disjoint_union(x, other, order);
        checks.push(check(
            format!("disjoint union with {other_name}"),
            r.holds,
            format!("{}", r.union),
        ));
    }

    let max_n = max_n.unwrap_or_else(|| default_max_n(x));
    let closed_form = euler::chi_sequence(x, max_n);
    for (n, expected) in closed_form.iter().enumerate().skip(2) {
        let name = format!("chi_{n} closed form = recursion");
        checks.push(
            match euler::chi_n_recursive(x, n, &limits.recursion_config()) {
                Ok(v) => check(name, &v == expected, format!("{expected} vs {v}")),
                Err(e) => limited(name, &e),
            },
        );

        let name = format!("chi_{n} closed form = oracle");
        checks.push(
            match oracle::stabilized_chi(x, n, limits.subdivisions, &limits.oracle_config()) {
                Ok(s) => check(
                    name,
                    &BigInt::from(s.value) == expected,
                    format!(
                        "{expected} vs {} (levels {:?}, heuristic stabilization)",
                        s.value, s.values
                    ),
                ),
                Err(e) => limited(name, &e),
            },
        );
    }

    ComplexReport {
        name: x.name().unwrap_or("unnamed").to_string(),
        checks,
    }
}

pub fn verify(
    complexes: &[SimplicialComplex],
    order: usize,
    max_n: Option<usize>,
    limits: &Limits,
    format: Format,
) -> Outcome {
    let reports: Vec<ComplexReport> = complexes
        .iter()
        .map(|x| verify_complex(x, order, max_n, limits))
        .collect();
    let passed = reports
        .iter()
        .flat_map(|r| &r.checks)
        .all(|c| c.status == Status::Pass);
    let report = VerifyReport {
        order,
        complexes: reports,
        passed,
    };
    let stdout = match format {
        Format::Machine => {
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Human => {
            let mut s = String::new();
            for c in &report.complexes {
                writeln!(s, "{}", c.name).unwrap();
                for r in &c.checks {
                    let status = match r.status {
                        Status::Pass => "pass",
                        Status::Fail => "FAIL",
                        Status::Inconclusive => "inconclusive",
                    };
                    writeln!(s, "  {:<40} {:<12} {}", r.check, status, r.detail).unwrap();
                }
            }
            writeln!(
                s,
                "{}",
                if report.passed {
                    "all checks passed"
                } else {
                    "some checks did not pass"
                }
            )
            .unwrap();
            s
        }
    };
    Outcome {
        code: report.exit_code(),
        stdout,
        stderr: String::new(),
    }
}
