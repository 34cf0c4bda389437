//! Built-in example corpus with stored expectations.

use std::ffi::OsString;

use clap::Parser;

use super::commands::execute;
use super::specfile::RingSpecFile;
use super::Cli;

pub const FIXTURES: &[(&str, &str)] = &[
    ("double_origin", include_str!("../../fixtures/double_origin.toml")),
    ("double_origin_b1", include_str!("../../fixtures/double_origin_b1.toml")),
    ("torsion_z2", include_str!("../../fixtures/torsion_z2.toml")),
    ("four_var", include_str!("../../fixtures/four_var.toml")),
    ("five_var", include_str!("../../fixtures/five_var.toml")),
    ("finite_z2", include_str!("../../fixtures/finite_z2.toml")),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub fixture: &'static str,
    pub command: String,
    pub expected: String,
    pub actual: std::result::Result<String, String>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.actual.as_deref() == Ok(self.expected.as_str())
    }
}

/// Runs every stored expectation. A fixture that fails to load yields one
/// failing outcome.
pub fn run_fixtures() -> Vec<FixtureOutcome> {
    let mut out = Vec::new();
    for &(name, text) in FIXTURES {
        let loaded = RingSpecFile::from_toml(text).and_then(|f| f.build().map(|s| (f, s)));
        let (file, spec) = match loaded {
            Ok(v) => v,
            Err(e) => {
                out.push(FixtureOutcome {
                    fixture: name,
                    command: "load".into(),
                    expected: "valid spec".into(),
                    actual: Err(e.to_string()),
                });
                continue;
            }
        };
        for exp in &file.expect {
            let argv: Vec<OsString> = std::iter::once("projd".to_string())
                .chain(std::iter::once(exp.command.clone()))
                .chain(exp.args.iter().cloned())
                .map(OsString::from)
                .collect();
            let actual = match Cli::try_parse_from(argv) {
                Err(e) => Err(e.to_string()),
                Ok(Cli { command: None, .. }) => Err("no command".into()),
                Ok(Cli { command: Some(cmd), .. }) => {
                    execute(&spec, text, &cmd).map(|r| r.rendering).map_err(|e| e.to_string())
                }
            };
            let command = std::iter::once(exp.command.as_str())
                .chain(exp.args.iter().map(String::as_str))
                .collect::<Vec<_>>()
                .join(" ");
            out.push(FixtureOutcome { fixture: name, command, expected: exp.output.clone(), actual });
        }
    }
    out
}
