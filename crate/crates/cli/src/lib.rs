//! Command-line front end for `scs-core`.
//!
//! Exit codes: `0` success, `1` unusable input or parameters, `2` exact
//! solver limit exceeded, `3` a result failed validation or a bound check
//! found a violation.

pub mod args;
mod gen;
pub mod input;
pub mod report;
mod solve;
mod verify;

use std::fmt;
use std::io::Write;

use clap::ValueEnum;

pub use args::Cli;
pub use gen::sidecar_path;
use args::Command;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub const INPUT: u8 = 1;
    pub const LIMIT: u8 = 2;
    pub const VALIDATION: u8 = 3;

    pub fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure { code, error: error.into() }
    }

    pub fn input(error: impl Into<anyhow::Error>) -> Self {
        Self::new(Self::INPUT, error)
    }

    pub fn validation(error: impl Into<anyhow::Error>) -> Self {
        Self::new(Self::VALIDATION, error)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.error)
    }
}

pub type CmdResult = Result<(), Failure>;

pub fn run(cli: Cli, out: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Solve(a) => solve::solve(&a, out),
        Command::Compare(a) => solve::compare(&a, out),
        Command::Verify(a) => verify::verify(&a, out),
        Command::Gen(a) => gen::generate(&a, out),
    }
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_owned()).unwrap_or_default()
}

fn write_out(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes()).map_err(|e| Failure::input(anyhow::Error::new(e).context("writing output")))
}
