use std::fmt::Write as _;
use std::path::PathBuf;

use chi_config::euler::{self, RecursionConfig, DEFAULT_CELL_BUDGET};
use chi_config::families;
use chi_config::oracle::{self, OracleConfig, DEFAULT_TUPLE_BUDGET};
use chi_config::series::DEFAULT_ORDER;
use chi_config::{Error, SimplicialComplex};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::document::parse_complex;
use crate::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_RESOURCE_LIMIT: i32 = 3;

/// Default number of barycentric subdivisions tried by the oracle.
pub const DEFAULT_SUBDIVISIONS: usize = 3;

#[derive(Debug, Parser)]
#[command(
    name = "chi-config",
    version,
    about = "Euler characteristics of ordered configuration spaces of simplicial complexes",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource limit."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f-vector, Euler characteristic and per-cell link data.
    Info {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Generating function in factored and expanded form.
    Eu {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// A single χ_n by one of the three methods.
    Chi {
        #[command(flatten)]
        source: Source,
        /// Number of particles.
        #[arg(short = 'n', long = "count")]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Theorem2)]
        method: Method,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Run the identity and cross-method checks.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Check the built-in corpus instead of a single complex.
        #[arg(long, conflicts_with_all = ["input", "generate"])]
        corpus: bool,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Largest particle count compared across methods
        /// [default: 3 for graphs, 2 otherwise].
        #[arg(short = 'n', long = "count")]
        n: Option<usize>,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct Source {
    /// Complex document (JSON with a "facets" array).
    #[arg(conflicts_with = "generate")]
    pub input: Option<PathBuf>,
    /// Built-in complex: simplex D | sphere D | path K | cycle K | star K |
    /// torus A B | point | empty.
    #[arg(long, num_args = 1.., value_names = ["FAMILY", "PARAMS"])]
    pub generate: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct Limits {
    /// Oracle subdivision cap.
    #[arg(long, default_value_t = DEFAULT_SUBDIVISIONS)]
    pub subdivisions: usize,
    /// Oracle worker threads [default: all cores].
    #[arg(long)]
    pub workers: Option<usize>,
    /// Oracle budget in examined candidate tuples.
    #[arg(long, default_value_t = DEFAULT_TUPLE_BUDGET)]
    pub budget: u64,
    /// Largest intermediate complex (in cells) allowed by the recursion.
    #[arg(long, default_value_t = DEFAULT_CELL_BUDGET)]
    pub cell_budget: usize,
}

impl Limits {
    pub fn oracle_config(&self) -> OracleConfig {
        OracleConfig {
            workers: self.workers,
            tuple_budget: self.budget,
        }
    }

    pub fn recursion_config(&self) -> RecursionConfig {
        RecursionConfig {
            cell_budget: self.cell_budget,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theorem2,
    Recursion,
    Oracle,
}

/// Result of one invocation: exit code plus what goes to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Core(Error::ResourceLimit { .. } | Error::NoStabilization { .. }) => {
            EXIT_RESOURCE_LIMIT
        }
        _ => EXIT_INPUT_ERROR,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT_ERROR
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn load(source: &Source) -> Result<SimplicialComplex, CliError> {
    match (&source.input, &source.generate) {
        (Some(path), None) => {
            let bytes = std::fs::read(path).map_err(|e| CliError::Io {
                path: path.clone(),
                source: e,
            })?;
            parse_complex(&bytes)
        }
        (None, Some(spec)) => {
            let (family, params) = spec.split_first().expect("clap requires one value");
            let params = params
                .iter()
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("parameter `{p}` is not a count")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(families::generate(family, &params)?)
        }
        _ => Err(CliError::Usage(
            "give an input file or --generate FAMILY PARAMS".into(),
        )),
    }
}

fn label(x: &SimplicialComplex) -> &str {
    x.name().unwrap_or("unnamed")
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Info { source, format } => info(&load(source)?, *format),
        Command::Eu {
            source,
            order,
            format,
        } => eu(&load(source)?, *order, *format),
        Command::Chi {
            source,
            n,
            method,
            limits,
            format,
        } => chi(&load(source)?, *n, *method, limits, *format),
        Command::Verify {
            source,
            corpus,
            order,
            n,
            limits,
            format,
        } => {
            let complexes = if *corpus {
                families::corpus()
            } else {
                vec![load(source)?]
            };
            Ok(crate::verify::verify(
                &complexes, *order, *n, limits, *format,
            ))
        }
    }
}

fn info(x: &SimplicialComplex, format: Format) -> Result<Outcome, CliError> {
    let f = x.f_vector();
    let data = euler::local_data(x);
    let out = match format {
        Format::Machine => render(&json!({
            "name": x.name(),
            "f_vector": f.0,
            "euler_char": x.euler_char(),
            "cells": data.iter().map(|d| json!({
                "cell": d.cell.vertices().iter().map(|v| v.0).collect::<Vec<_>>(),
                "dim": d.dim,
                "link_chi": d.link_chi,
                "measure": d.measure,
                "boundary_weight": d.boundary_weight,
            })).collect::<Vec<_>>(),
        })),
        Format::Human => {
            let mut s = String::new();
            writeln!(s, "complex: {}", label(x)).unwrap();
            writeln!(s, "f-vector: {:?}", f.0).unwrap();
            writeln!(s, "euler characteristic: {}", x.euler_char()).unwrap();
            writeln!(s, "{:<24} {:>4} {:>8} {:>8}", "cell", "dim", "chi(L)", "mu").unwrap();
            for d in &data {
                writeln!(
                    s,
                    "{:<24} {:>4} {:>8} {:>8}",
                    d.cell.to_string(),
                    d.dim,
                    d.link_chi,
                    d.measure
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn eu(x: &SimplicialComplex, order: usize, format: Format) -> Result<Outcome, CliError> {
    let product = euler::gen_function(x);
    let series = product.expand(order);
    let chi = series.chi_values();
    let out = match format {
        Format::Machine => render(&json!({
            "name": x.name(),
            "order": order,
            "factors": product.factors().iter().map(|f| [f.a, f.exponent.value()]).collect::<Vec<_>>(),
            "series": strings(series.coeffs()),
            "chi": strings(&chi),
        })),
        Format::Human => format!(
            "complex: {}\neu: {}\nseries: {}\nchi: [{}]\n",
            label(x),
            product,
            series,
            strings(&chi).join(", ")
        ),
    };
    Ok(Outcome::ok(out))
}

fn chi(
    x: &SimplicialComplex,
    n: usize,
    method: Method,
    limits: &Limits,
    format: Format,
) -> Result<Outcome, CliError> {
    let mut extra = serde_json::Map::new();
    let mut note = String::new();
    let value: BigInt = match method {
        Method::Theorem2 => euler::chi_n(x, n),
        Method::Recursion => euler::chi_n_recursive(x, n, &limits.recursion_config())?,
        Method::Oracle => {
            if n == 0 {
                BigInt::from(1)
            } else {
                let s = oracle::stabilized_chi(x, n, limits.subdivisions, &limits.oracle_config())?;
                extra.insert("level".into(), json!(s.level));
                extra.insert("levels".into(), json!(s.values));
                extra.insert(
                    "heuristic".into(),
                    json!("two consecutive subdivision levels agree"),
                );
                note = format!(
                    "# oracle values by subdivision level {:?}; stable from level {} (heuristic)\n",
                    s.values, s.level
                );
                BigInt::from(s.value)
            }
        }
    };
    let out = match format {
        Format::Machine => {
            let mut obj = serde_json::Map::new();
            obj.insert("name".into(), json!(x.name()));
            obj.insert("n".into(), json!(n));
            obj.insert("method".into(), json!(method));
            obj.insert("chi".into(), json!(value.to_string()));
            obj.extend(extra);
            render(&Value::Object(obj))
        }
        Format::Human => format!("{value}\n{note}"),
    };
    Ok(Outcome::ok(out))
}
