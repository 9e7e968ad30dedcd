//! Command-line front end: reads a problem file and runs `groebner`,
//! `decompose`, `factor` or `verify`, printing text or JSON.
//!
//! Exit codes: 0 success, 1 math-domain error or failed check, 2 parse or
//! usage error.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use fqdecomp::mpoly::OrderKind;
use fqdecomp::primdec::{primary_decomposition_with, verify, DecomposeConfig};
use fqdecomp::univar::factor_with;

pub mod problem;
pub mod render;

pub use problem::ProblemFile;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Math(#[from] fqdecomp::Error),
    /// Carries the rendered report so it can still be printed.
    #[error("verification failed: {failed}")]
    CheckFailed { failed: String, output: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Math(_) | CliError::CheckFailed { .. } => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grevlex,
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => OrderKind::Lex,
            OrderArg::Grevlex => OrderKind::Grevlex,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "fqdecomp", version, about = "Primary decomposition of zero-dimensional ideals over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Override the monomial order given in the file.
    #[arg(long, global = true, value_enum)]
    pub order: Option<OrderArg>,
    /// Suppress normal output; only the exit code and errors remain.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// After `decompose`, run the verifier and exit 1 if any check fails.
    #[arg(long, global = true)]
    pub check: bool,
    /// Run component saturations on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the reduced Gröbner basis.
    Groebner { input: PathBuf },
    /// Print t, the primitive idempotents and the primary components.
    Decompose { input: PathBuf },
    /// Factor a univariate polynomial into primary factors.
    Factor { input: PathBuf },
    /// Decompose, then run every structural check.
    Verify { input: PathBuf },
}

impl Command {
    fn input(&self) -> &PathBuf {
        match self {
            Command::Groebner { input }
            | Command::Decompose { input }
            | Command::Factor { input }
            | Command::Verify { input } => input,
        }
    }
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    Ok(text)
}

/// Runs one invocation and returns the rendered standard output.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    let text = read_input(cli.command.input(), stdin)?;
    let pf = problem::parse(&text, cli.order.map(Into::into))?;
    let config = DecomposeConfig { parallel: !cli.sequential, ..Default::default() };

    match &cli.command {
        Command::Groebner { .. } => {
            let ideal = pf.ideal();
            Ok(render::groebner(&pf, ideal.groebner(), cli.json))
        }
        Command::Factor { .. } => {
            let [f] = pf.generators.as_slice() else {
                return Err(CliError::Usage(format!(
                    "factor expects exactly one polynomial, got {}",
                    pf.generators.len()
                )));
            };
            let fz = factor_with(f, &config)?;
            Ok(render::factorization(&pf, &fz, cli.json))
        }
        Command::Decompose { .. } | Command::Verify { .. } => {
            let d = primary_decomposition_with(&pf.ideal(), &config)?;
            let run_checks = cli.check || matches!(cli.command, Command::Verify { .. });
            let report = run_checks.then(|| verify(&d));
            let out = render::decomposition(&pf, &d, report.as_ref(), cli.json);
            match report {
                Some(r) if !r.passed() => {
                    let failed: Vec<&str> =
                        r.checks().into_iter().filter(|(_, ok)| !ok).map(|(name, _)| name).collect();
                    Err(CliError::CheckFailed { failed: failed.join(", "), output: out })
                }
                _ => Ok(out),
            }
        }
    }
}

/// Full entry point: parses `args`, runs, writes to `out`/`err`, returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => {
            if !cli.quiet {
                let _ = out.write_all(text.as_bytes());
            }
            0
        }
        Err(e) => {
            if let (CliError::CheckFailed { output, .. }, false) = (&e, cli.quiet) {
                let _ = out.write_all(output.as_bytes());
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
