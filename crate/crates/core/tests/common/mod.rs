//! Fixture paths, the binary runner and the tables shared by the CLI tests
//! and the acceptance suite.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use monoretract::cli::{parse_input, render_map, render_matrix, Input};

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn golden(command: &str, fixture: &str) -> PathBuf {
    let stem = fixture.split('.').next().unwrap();
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{command}-{stem}.txt"))
}

/// Runs the binary and returns stdout, stderr and the exit code.
pub fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_monoretract"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exit code"),
    )
}

pub fn run_on(command: &str, name: &str) -> (String, String, i32) {
    run(&[command, fixture(name).to_str().unwrap()])
}

pub const EXAMPLE_FIXTURES: [&str; 3] = ["phi1.matrix", "single.matrix", "phi1_partner.matrix"];
pub const GOLDEN_COMMANDS: [&str; 3] = ["analyze", "count", "equivalents"];

/// `(command, fixture, expected exit status)`.
pub const EXIT_CASES: &[(&str, &str, i32)] = &[
    ("verify", "identity.map", 0),
    ("verify", "phi1.map", 0),
    ("verify", "z6.map", 0),
    ("verify", "degenerate.matrix", 0),
    ("verify", "swap.map", 1),
    ("verify", "not_idempotent.matrix", 1),
    ("verify", "malformed.map", 2),
    ("analyze", "signed.map", 0),
    ("analyze", "degenerate.matrix", 0),
    ("analyze", "swap.map", 1),
    ("analyze", "malformed.matrix", 2),
    ("standardize", "degenerate.matrix", 0),
    ("standardize", "not_idempotent.matrix", 1),
    ("count", "two_entry_row.matrix", 0),
    ("count", "degenerate.matrix", 1),
    ("count", "swap.map", 1),
    ("count", "malformed.map", 2),
    ("equivalents", "phi1.map", 0),
    ("equivalents", "degenerate.matrix", 1),
    ("witness", "phi1_partner.matrix", 0),
    ("witness", "degenerate.matrix", 1),
    ("witness", "malformed.matrix", 2),
];

/// Checks one exit case, returning a description of the first problem.
pub fn check_exit_case(command: &str, name: &str, expected: i32) -> Result<(), String> {
    let (stdout, stderr, status) = run_on(command, name);
    let streams_ok = match expected {
        0 => stderr.is_empty(),
        1 => stdout.contains("rejected:") && stderr.starts_with("rejected:"),
        _ => stdout.is_empty() && stderr.starts_with("error:"),
    };
    if status != expected {
        Err(format!(
            "{command} {name}: exit {status}, expected {expected}\n{stderr}"
        ))
    } else if !streams_ok {
        Err(format!(
            "{command} {name}: unexpected output\n{stdout}\n{stderr}"
        ))
    } else {
        Ok(())
    }
}

/// Checks that every well-formed fixture re-renders to an equal value and
/// to the same text up to whitespace. Returns the number checked.
pub fn check_round_trips() -> Result<usize, String> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    let mut seen = 0;
    for path in paths {
        let text = std::fs::read_to_string(&path).unwrap();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let Ok(input) = parse_input(&text) else {
            if name.starts_with("malformed") {
                continue;
            }
            return Err(format!("{name} does not parse"));
        };
        let rendered = match &input {
            Input::Map(map) => render_map(map),
            Input::Matrix(m) => render_matrix(m),
        };
        if parse_input(&rendered).ok().as_ref() != Some(&input) {
            return Err(format!("{name} does not reparse to an equal value"));
        }
        let squash = |s: &str| s.split_whitespace().collect::<String>();
        if squash(&rendered) != squash(&text) {
            return Err(format!("{name} renders differently:\n{rendered}"));
        }
        seen += 1;
    }
    Ok(seen)
}
