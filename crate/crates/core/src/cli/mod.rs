//! The `projd` command line.

pub mod commands;
pub mod fixtures;
pub mod specfile;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

use crate::error::Error;
pub use commands::{execute, parse_degree, parse_ideal, Command, Report};
pub use fixtures::{run_fixtures, FIXTURES};
pub use specfile::{parse_ring_spec, RingSpecFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "projd", version, about = "Multigraded Proj: charts, separatedness and twisting sheaves")]
pub struct Cli {
    /// Ring description (TOML)
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
    /// Print the structured report as JSON
    #[arg(long, global = true)]
    pub json: bool,
    /// Run the built-in example corpus against its stored expectations
    #[arg(long)]
    pub fixtures: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Invariant(_) | Error::Overflow | Error::SearchExhausted { .. } => EXIT_INVARIANT,
        _ => EXIT_VALIDATION,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if e.use_stderr() => return Outcome::fail(EXIT_USAGE, e.to_string()),
        Err(e) => return Outcome::ok(e.to_string()),
    };
    if cli.fixtures {
        return fixtures_outcome();
    }
    let Some(command) = cli.command else {
        return Outcome::fail(EXIT_USAGE, "error: a command or --fixtures is required\n".into());
    };
    let Some(path) = cli.spec else {
        return Outcome::fail(EXIT_USAGE, "error: --spec <FILE> is required\n".into());
    };
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_VALIDATION, format!("error: cannot read {}: {e}\n", path.display())),
    };
    let spec = match parse_ring_spec(&text) {
        Ok(s) => s,
        Err(e) => {
            let at = specfile::locate(&text, &e).map(|(l, c)| format!(":{l}:{c}")).unwrap_or_default();
            return Outcome::fail(exit_code(&e), format!("error: {}{at}: {e}\n", path.display()));
        }
    };
    match execute(&spec, &text, &command) {
        Ok(report) if cli.json => Outcome::ok(serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"),
        Ok(report) => Outcome::ok(report.rendering + "\n"),
        Err(e) => Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    }
}

fn fixtures_outcome() -> Outcome {
    let results = run_fixtures();
    let mut stdout = String::new();
    let mut failed = 0;
    for r in &results {
        if r.passed() {
            stdout.push_str(&format!("ok    {} :: {}\n", r.fixture, r.command));
        } else {
            failed += 1;
            let actual = match &r.actual {
                Ok(s) => s.clone(),
                Err(e) => format!("error: {e}"),
            };
            stdout.push_str(&format!(
                "FAIL  {} :: {}\n  expected: {}\n  actual:   {}\n",
                r.fixture,
                r.command,
                r.expected.replace('\n', "\n            "),
                actual.replace('\n', "\n            ")
            ));
        }
    }
    stdout.push_str(&format!("{} passed, {} failed\n", results.len() - failed, failed));
    Outcome { code: if failed == 0 { EXIT_OK } else { EXIT_INVARIANT }, stdout, stderr: String::new() }
}
