//! Command-line front end. Reads map or matrix files, runs the library
//! operations and reports the results as text or JSON.
//!
//! Exit status: 0 on success, 1 when the input is well formed but fails a
//! mathematical precondition (not a retraction, degenerate, ...), 2 on
//! malformed input or flags.

pub mod parse;
pub mod report;

use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::crosscheck::cross_validate;
use crate::domain::Domain;
use crate::error::Error;
use crate::matrix::ExponentMatrix;
use crate::monomial::{Image, MonomialMap};
use crate::oracle;
use crate::same_retract::{count_same_retract, enumerate_same_retract, gamma_sets};
use crate::structure::{associated_monic, decompose, polynomial_ring_witness};
use crate::transform::standardize;

pub use parse::{
    parse_input, parse_map, parse_matrix, render_map, render_matrix, Input, ParseError,
};
pub use report::Report;

/// `equivalents` refuses to list more matrices than this without `--force`.
pub const EQUIVALENTS_LIMIT: u64 = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "monoretract",
    version,
    about = "Analyze monomial retractions of polynomial rings"
)]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report whether the input is a retraction, monic and non-degenerate.
    Verify { file: PathBuf },
    /// Full report: matrix, structure, standard form, retract, witness, Γ sets.
    Analyze {
        file: PathBuf,
        /// List equivalents even beyond the size limit.
        #[arg(long)]
        force: bool,
    },
    /// Conjugate into standard form and report the permutation.
    Standardize { file: PathBuf },
    /// List every monic retraction with the same retract.
    Equivalents {
        file: PathBuf,
        /// List the matrices even beyond the size limit.
        #[arg(long)]
        force: bool,
    },
    /// Count the monic retractions with the same retract.
    Count { file: PathBuf },
    /// Standardize, then exhibit the retract as a polynomial ring.
    Witness { file: PathBuf },
    /// Exhaustive census of idempotent matrices with bounded entries.
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: u64,
    },
    /// Cross-validate the structural results against the brute-force oracle.
    OracleCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: u64,
        /// Degree cap for monoid generation (default 3 * bound * n).
        #[arg(long)]
        cap: Option<u64>,
    },
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

enum Failure {
    Input(String),
    Rejected(Box<Report>, String),
}

fn rejected(report: Report, reason: impl Into<String>) -> Failure {
    Failure::Rejected(Box::new(report), reason.into())
}

impl Failure {
    fn from_library(report: Report, e: Error) -> Failure {
        match e {
            Error::NotRetraction
            | Error::NotIdempotent
            | Error::NotStandard
            | Error::NotMonic
            | Error::NotEndomorphism { .. }
            | Error::Degenerate(_)
            | Error::ZeroRow(_)
            | Error::ZeroImage(_) => rejected(report, e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    status,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    status,
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let render = |report: &Report| {
        if cli.json {
            report.to_json()
        } else {
            report.to_text()
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let stdout = match (&report.census, cli.json) {
                (Some(census), false) => census.render(),
                _ => render(&report),
            };
            let failed = report
                .oracle_check
                .as_ref()
                .is_some_and(|s| !s.all_passed());
            Outcome {
                stdout,
                stderr: if failed {
                    "oracle check found mismatches\n".to_string()
                } else {
                    String::new()
                },
                status: i32::from(failed),
            }
        }
        Err(Failure::Rejected(mut report, reason)) => {
            report.rejection = Some(reason.clone());
            Outcome {
                stdout: render(&report),
                stderr: format!("rejected: {reason}\n"),
                status: 1,
            }
        }
        Err(Failure::Input(message)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            status: 2,
        },
    }
}

fn load(path: &Path) -> Result<Input, Failure> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| Failure::Input(format!("{}:{e}", path.display())))
}

/// The input after the checks every file-based command shares.
struct Subject {
    report: Report,
    domain: Domain,
    retraction: bool,
    nondegenerate: bool,
    /// Exponent matrix of the input or of its monic part, when defined.
    matrix: Option<ExponentMatrix>,
}

fn assess(input: Input) -> Subject {
    let mut report = Report::new("");
    match input {
        Input::Matrix(m) => {
            let idempotent = m.is_idempotent().unwrap_or(false);
            let nondegenerate = m.is_nondegenerate();
            report.input = Some(report::InputSection::from_matrix(&m));
            report.validity = Some(report::Validity {
                endomorphism: true,
                retraction: idempotent,
                monic: true,
                nondegenerate,
            });
            Subject {
                report,
                domain: Domain::Integers,
                retraction: idempotent,
                nondegenerate,
                matrix: Some(m),
            }
        }
        Input::Map(map) => {
            let retraction = map.is_retraction();
            let nondegenerate = map.is_nondegenerate();
            report.input = Some(report::InputSection::from_map(&map));
            report.validity = Some(report::Validity {
                endomorphism: map.is_endomorphism(),
                retraction,
                monic: map.is_monic(),
                nondegenerate,
            });
            if !map.is_monic() && retraction && nondegenerate {
                if let Ok(a) = associated_monic(&map) {
                    report.association = Some((&a).into());
                }
            }
            let matrix = ExponentMatrix::from_monic_map(&map.monic_part()).ok();
            if matrix.is_none() {
                if let Some(i) = map.images().iter().position(Image::is_zero) {
                    report.notes.push(format!(
                        "X{} is mapped to zero, so the map has no exponent matrix",
                        i + 1
                    ));
                }
            }
            Subject {
                report,
                domain: map.domain(),
                retraction,
                nondegenerate,
                matrix,
            }
        }
    }
}

/// Exponent matrix of a retraction whose monic part is again a retraction.
fn idempotent_matrix(s: &mut Subject) -> Result<ExponentMatrix, Failure> {
    let report = std::mem::take(&mut s.report);
    if !s.retraction {
        return Err(rejected(report, Error::NotRetraction.to_string()));
    }
    let Some(m) = s.matrix.clone() else {
        return Err(rejected(
            report,
            "the exponent matrix needs every variable to have a nonzero image".to_string(),
        ));
    };
    match m.is_idempotent() {
        Ok(true) => {
            s.report = report;
            Ok(m)
        }
        Ok(false) => Err(rejected(
            report,
            "the monic part is not a retraction".to_string(),
        )),
        Err(e) => Err(Failure::from_library(report, e)),
    }
}

fn nondegenerate_matrix(s: &mut Subject) -> Result<ExponentMatrix, Failure> {
    let m = idempotent_matrix(s)?;
    if let Some(i) = m.first_zero_row() {
        let report = std::mem::take(&mut s.report);
        return Err(rejected(report, Error::Degenerate(i + 1).to_string()));
    }
    Ok(m)
}

fn subject(command: &str, file: &Path) -> Result<Subject, Failure> {
    let mut s = assess(load(file)?);
    s.report.command = command.to_string();
    Ok(s)
}

fn lib<T>(report: &mut Report, r: crate::error::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::from_library(std::mem::take(report), e))
}

fn execute(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Verify { file } => {
            let mut s = subject("verify", file)?;
            if !s.retraction {
                return Err(rejected(s.report, Error::NotRetraction.to_string()));
            }
            s.report.notes.clear();
            Ok(s.report)
        }
        Command::Analyze { file, force } => analyze(subject("analyze", file)?, *force),
        Command::Standardize { file } => {
            let mut s = subject("standardize", file)?;
            let m = idempotent_matrix(&mut s)?;
            let (standard, sigma) = lib(&mut s.report, standardize(&m))?;
            s.report.exponent_matrix = Some(m);
            s.report.standardization = Some(report::Standardization {
                matrix: standard,
                sigma,
            });
            Ok(s.report)
        }
        Command::Equivalents { file, force } => {
            let mut s = subject("equivalents", file)?;
            let m = nondegenerate_matrix(&mut s)?;
            let gamma = lib(&mut s.report, gamma_sets(&m))?;
            let count = lib(&mut s.report, count_same_retract(&m))?;
            if count > EQUIVALENTS_LIMIT && !force {
                return Err(Failure::Input(format!(
                    "{count} equivalent matrices exceed the limit of {EQUIVALENTS_LIMIT}; pass --force to list them"
                )));
            }
            let listed = lib(&mut s.report, enumerate_same_retract(&m))?;
            s.report.exponent_matrix = Some(m);
            s.report.gamma = Some((&gamma).into());
            s.report.count = Some(count);
            s.report.equivalents = Some(listed);
            Ok(s.report)
        }
        Command::Count { file } => {
            let mut s = subject("count", file)?;
            let m = nondegenerate_matrix(&mut s)?;
            let gamma = lib(&mut s.report, gamma_sets(&m))?;
            let count = lib(&mut s.report, count_same_retract(&m))?;
            s.report.exponent_matrix = Some(m);
            s.report.gamma = Some((&gamma).into());
            s.report.count = Some(count);
            Ok(s.report)
        }
        Command::Witness { file } => {
            let mut s = subject("witness", file)?;
            let m = nondegenerate_matrix(&mut s)?;
            let (standard, sigma) = lib(&mut s.report, standardize(&m))?;
            let w = lib(&mut s.report, polynomial_ring_witness(&standard, s.domain))?;
            s.report.exponent_matrix = Some(m);
            s.report.standardization = Some(report::Standardization {
                matrix: standard,
                sigma,
            });
            s.report.witness = Some((&w).into());
            Ok(s.report)
        }
        Command::Catalog { n, bound } => {
            let census = oracle::enumerate_idempotent(*n, *bound)
                .map_err(|e| Failure::Input(e.to_string()))?;
            let mut report = Report::new("catalog");
            report.census = Some(census);
            Ok(report)
        }
        Command::OracleCheck { n, bound, cap } => {
            let summary =
                cross_validate(*n, *bound, *cap).map_err(|e| Failure::Input(e.to_string()))?;
            let mut report = Report::new("oracle-check");
            report.oracle_check = Some(summary);
            Ok(report)
        }
    }
}

fn analyze(mut s: Subject, force: bool) -> Result<Report, Failure> {
    let report = &mut s.report;
    if let Some(m) = &s.matrix {
        report.exponent_matrix = Some(m.clone());
        report.structure = Some(report::StructureSection {
            clauses: m.structure_report(),
            rank: m.rank().ok(),
        });
    }
    if !s.retraction {
        let report = std::mem::take(report);
        return Err(rejected(report, Error::NotRetraction.to_string()));
    }
    let Some(m) = s
        .matrix
        .clone()
        .filter(|m| m.is_idempotent().unwrap_or(false))
    else {
        if s.matrix.is_some() {
            report
                .notes
                .push("the monic part is not a retraction".to_string());
        }
        return Ok(s.report);
    };
    let (standard, sigma) = lib(report, standardize(&m))?;
    report.standardization = Some(report::Standardization {
        matrix: standard.clone(),
        sigma,
    });
    if !s.nondegenerate {
        report.notes.push(
            "the retraction is degenerate; retract, witness and equivalents need a non-degenerate one"
                .to_string(),
        );
        return Ok(s.report);
    }
    let monic: MonomialMap = m.to_monic_map(s.domain);
    let structure = lib(report, decompose(&monic))?;
    report.retract = Some((&structure).into());
    let w = lib(report, polynomial_ring_witness(&standard, s.domain))?;
    report.witness = Some((&w).into());
    let gamma = lib(report, gamma_sets(&m))?;
    report.gamma = Some((&gamma).into());
    let count = lib(report, count_same_retract(&m))?;
    report.count = Some(count);
    if count <= EQUIVALENTS_LIMIT || force {
        report.equivalents = Some(lib(report, enumerate_same_retract(&m))?);
    } else {
        report.notes.push(format!(
            "{count} equivalents exceed the listing limit of {EQUIVALENTS_LIMIT}; pass --force to list them"
        ));
    }
    Ok(s.report)
}
