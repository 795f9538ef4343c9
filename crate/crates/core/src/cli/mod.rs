//! The `quiverdt` batch front end.
//!
//! ```text
//! quiverdt <dt|kac|refined|hn|stable|oracle|selftest> --quiver FILE --max-degree N
//!          [--levels n] [--theta "1,0"] [--prime p] [--format table|json]
//! ```
//!
//! Exit codes: 0 when every asserted check passes, 1 on an assertion
//! failure, 2 on bad input.

mod commands;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

pub use report::{
    laurent_from_json, laurent_to_json, ratfunc_from_json, ratfunc_to_json, Cell, Check, Report, Table,
};

use crate::error::Error;
use crate::quiver::{QuiverFile, Stability};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Dt,
    Kac,
    Refined,
    Hn,
    Stable,
    Oracle,
    Selftest,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "quiverdt", version, about = "Exact DT invariants and Kac polynomials of quivers")]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// quiver description (JSON)
    #[arg(long)]
    quiver: PathBuf,
    /// truncation bound on the total degree
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: u32,
    /// number of levels for the refined series (default: max degree)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    levels: Option<u64>,
    /// stability parameter, e.g. "1,0" or "1/2,-1"
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// prime for the finite-field oracle
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobConfig {
    pub quiver_path: PathBuf,
    pub command: Command,
    pub max_degree: u32,
    pub levels: Option<usize>,
    pub theta: Option<Stability>,
    pub prime: Option<u64>,
    pub output_format: Format,
}

/// Exit code and rendered output of one job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Self {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Exit code for a library error: results that contradict a theorem count
/// as assertion failures, everything else is bad input.
fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NotLaurent { .. } | Error::NotPolynomialInQ { .. } => 1,
        _ => 2,
    }
}

pub fn run(config: &JobConfig) -> Outcome {
    let text = match std::fs::read_to_string(&config.quiver_path) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(format!("{}: {e}", config.quiver_path.display())),
    };
    let (quiver, file_theta) = match QuiverFile::parse(&text) {
        Ok(x) => x,
        Err(e) => return Outcome::input_error(format!("{}: {e}", config.quiver_path.display())),
    };
    let theta = config.theta.clone().or(file_theta);
    if let Some(t) = &theta {
        if t.len() != quiver.vertices() {
            return Outcome::input_error(format!(
                "theta has {} entries but the quiver has {} vertices",
                t.len(),
                quiver.vertices()
            ));
        }
    }
    let job = commands::Job {
        quiver,
        bound: config.max_degree,
        levels: config.levels.unwrap_or(config.max_degree as usize),
        theta,
        prime: config.prime,
    };
    match commands::execute(config.command, &job) {
        Ok(report) => Outcome {
            exit_code: if report.failed() { 1 } else { 0 },
            stdout: match config.output_format {
                Format::Table => report.to_table(),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report.to_json()).expect("JSON values serialize");
                    s.push('\n');
                    s
                }
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            exit_code: exit_code_for(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Parses arguments and runs the job.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let theta = match args.theta.as_deref().map(str::parse::<Stability>).transpose() {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(format!("--theta: {e}")),
    };
    run(&JobConfig {
        quiver_path: args.quiver,
        command: args.command,
        max_degree: args.max_degree,
        levels: args.levels.map(|n| n as usize),
        theta,
        prime: args.prime,
        output_format: args.format,
    })
}
