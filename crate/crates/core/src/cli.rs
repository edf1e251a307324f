//! The `boltool` command line.
//!
//! ```text
//! boltool check FILE
//! boltool report FILE [--radical] [--series] [--levi] [--paper-compare] [--json] [--force]
//! boltool catalog list | show ID [--param k=v]... | export ID [--param k=v]...
//! boltool from-torsion FILE
//! boltool to-torsion FILE
//! ```
//!
//! `FILE` may be `-` for standard input. Exit statuses are listed in [`exit`].

use std::ffi::OsString;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand};

use crate::axioms::check_axioms;
use crate::boltext;
use crate::catalog::{self, CatalogEntry};
use crate::error::Error;
use crate::geometry::{from_torsion, torsion_of};
use crate::report::{build_report, describe, render_check, ReportOptions};

/// Process exit statuses.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// The algebra fails at least one of the Bol identities.
    pub const AXIOM_FAILURE: i32 = 1;
    /// Bad command line, unknown catalog id or bad parameter.
    pub const USAGE: i32 = 2;
    /// The input file could not be read or parsed.
    pub const PARSE_ERROR: i32 = 3;
    /// A documented precondition does not hold.
    pub const PRECONDITION: i32 = 4;
    /// The weakly solvable ideals found do not sum to a weakly solvable ideal.
    pub const STRUCTURAL_ANOMALY: i32 = 5;
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Read { .. } | Error::Malformed(_) => exit::PARSE_ERROR,
        Error::UnknownEntry(_) | Error::Parameter { .. } => exit::USAGE,
        Error::InvalidAlgebra(_) => exit::AXIOM_FAILURE,
        Error::StructuralAnomaly(_) => exit::STRUCTURAL_ANOMALY,
        Error::DimensionMismatch { .. }
        | Error::UnsupportedSize { .. }
        | Error::Precondition(_)
        | Error::InvalidFixture { .. } => exit::PRECONDITION,
    }
}

#[derive(Parser, Debug)]
#[command(name = "boltool", version, about = "Exact structure computations for Bol algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Bol identities B1-B4 on the basis.
    Check {
        /// boltext file, or `-` for stdin.
        file: String,
    },
    /// Structure report: products, weak derived series, radical, splitting.
    Report {
        /// boltext file, or `-` for stdin.
        file: String,
        /// Ideal lattice and weak radical.
        #[arg(long)]
        radical: bool,
        /// Weak derived series of V.
        #[arg(long)]
        series: bool,
        /// Complement S of the radical with its four checks.
        #[arg(long)]
        levi: bool,
        /// Print published values for catalog entries next to computed ones.
        #[arg(long)]
        paper_compare: bool,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
        /// Compute structure sections even if the identities fail.
        #[arg(long)]
        force: bool,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Build an algebra from a torsion file (`tor`/`dtor` records).
    FromTorsion { file: String },
    /// Write the torsion data of an algebra as a torsion file.
    ToTorsion { file: String },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// One line per entry.
    List,
    /// Description, parameters, structure constants and published values.
    Show {
        id: String,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// The entry as a boltext document.
    Export {
        id: String,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return if e.use_stderr() { exit::USAGE } else { exit::SUCCESS };
        }
    };
    let mut io = Io { stdin, out, err };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Error> {
    let mut text = String::new();
    let result = if path == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Error::Read { path: path.to_string(), message: e.to_string() })?;
    Ok(text)
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<i32, Error> {
    match command {
        Command::Check { file } => {
            let v = boltext::parse(&read_input(&file, io.stdin)?)?;
            let report = check_axioms(&v);
            let _ = write!(io.out, "{}", render_check(&v, &report));
            Ok(if report.all_pass() { exit::SUCCESS } else { exit::AXIOM_FAILURE })
        }
        Command::Report { file, radical, series, levi, paper_compare, json, force } => {
            let v = boltext::parse(&read_input(&file, io.stdin)?)?;
            let options = ReportOptions { radical, series, levi, paper_compare, force };
            let report = build_report(&v, options)?;
            if json {
                for w in &report.warnings {
                    let _ = writeln!(io.err, "warning: {w}");
                }
                let _ = write!(io.out, "{}", report.to_json());
            } else {
                let _ = write!(io.out, "{report}");
            }
            Ok(if report.axioms.all_pass() { exit::SUCCESS } else { exit::AXIOM_FAILURE })
        }
        Command::Catalog { action } => catalog_command(action, io),
        Command::FromTorsion { file } => {
            let parsed = boltext::parse_torsion(&read_input(&file, io.stdin)?)?;
            let (mut v, report) = from_torsion(&parsed.data);
            v = v.with_label(parsed.label);
            for (k, val) in parsed.metadata {
                v = v.with_meta(k, val);
            }
            let _ = write!(io.out, "{}", boltext::serialize(&v));
            let _ = write!(io.err, "{}", render_check(&v, &report));
            Ok(if report.all_pass() { exit::SUCCESS } else { exit::AXIOM_FAILURE })
        }
        Command::ToTorsion { file } => {
            let v = boltext::parse(&read_input(&file, io.stdin)?)?;
            let text = boltext::serialize_torsion(&torsion_of(&v), v.label(), v.metadata())
                .map_err(|e| Error::Precondition(e.to_string()))?;
            let _ = write!(io.out, "{text}");
            Ok(exit::SUCCESS)
        }
    }
}

fn catalog_command(action: CatalogAction, io: &mut Io<'_>) -> Result<i32, Error> {
    match action {
        CatalogAction::List => {
            for s in catalog::list() {
                let _ = writeln!(io.out, "{s}");
            }
            Ok(exit::SUCCESS)
        }
        CatalogAction::Export { id, params } => {
            let entry = catalog::get(&id, &catalog::parse_params(&params)?)?;
            let _ = write!(io.out, "{}", boltext::serialize(&entry.algebra));
            Ok(exit::SUCCESS)
        }
        CatalogAction::Show { id, params } => {
            let mut params = catalog::parse_params(&params)?;
            let sampled = params.is_empty() && !catalog::required_params(&id)?.is_empty();
            if sampled {
                params = catalog::sample_params(&id)?;
            }
            let entry = catalog::get(&id, &params)?;
            let _ = write!(io.out, "{}", show(&entry, sampled)?);
            Ok(exit::SUCCESS)
        }
    }
}

fn show(entry: &CatalogEntry, sampled: bool) -> Result<String, Error> {
    use std::fmt::Write as _;
    let mut s = String::new();
    let v = &entry.algebra;
    let _ = writeln!(s, "{}: {}", entry.id, catalog::description(&entry.id)?);
    let _ = writeln!(s, "label: {}", v.label());
    let _ = writeln!(s, "dim: {}", v.dim());
    if !entry.params.is_empty() {
        let ps: Vec<String> = entry
            .params
            .iter()
            .map(|(k, q)| format!("{k} = {}", crate::linalg::format_scalar(q)))
            .collect();
        let suffix = if sampled { " (sample values; pass --param to choose)" } else { "" };
        let _ = writeln!(s, "parameters: {}{suffix}", ps.join(", "));
    }
    if let Some(c) = &entry.constraint {
        let _ = writeln!(s, "parameter constraint (recorded, not enforced): {c}");
    }
    let _ = writeln!(s, "provenance: {}", entry.provenance);
    let _ = writeln!(s, "axioms: {}", catalog::axiom_status(v));
    let _ = writeln!(s, "structure constants:");
    for line in boltext::serialize(v).lines().filter(|l| l.starts_with("bin") || l.starts_with("tri")) {
        let _ = writeln!(s, "  {line}");
    }
    if let Some(claims) = &entry.claims {
        let _ = writeln!(s, "published values:");
        for q in &claims.quoted {
            let _ = writeln!(s, "  {q}");
        }
        for (name, value) in [("V·V", &claims.product_space), ("RV", &claims.radical), ("SMV", &claims.complement)] {
            if let Some(value) = value {
                let _ = writeln!(s, "  claimed {name}: {}", describe(value));
            }
        }
        if let Some(h) = claims.homogeneous {
            let _ = writeln!(s, "  homogeneous: {}", if h { "yes" } else { "no" });
        }
        for n in &claims.notes {
            let _ = writeln!(s, "  note: {n}");
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut stdin = input.as_bytes();
        let code = run(std::iter::once("boltool").chain(args.iter().copied()), &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn export_then_check() {
        let (code, text, _) = run_str(&["catalog", "export", "type-i"], "");
        assert_eq!(code, exit::SUCCESS);
        assert_eq!(run_str(&["check", "-"], &text).0, exit::SUCCESS);
    }

    #[test]
    fn type_iv_check_fails_b2() {
        let (_, text, _) = run_str(&["catalog", "export", "type-iv", "--param", "x=1", "--param", "p=1"], "");
        let (code, out, _) = run_str(&["check", "-"], &text);
        assert_eq!(code, exit::AXIOM_FAILURE);
        assert!(out.contains("B2  FAIL") && out.contains("(1, 2, 3)"), "{out}");
    }

    #[test]
    fn garbage_is_a_parse_error() {
        assert_eq!(run_str(&["check", "-"], "").0, exit::PARSE_ERROR);
        assert_eq!(run_str(&["check", "-"], "hello\n").0, exit::PARSE_ERROR);
        assert_eq!(run_str(&["check", "/nonexistent/file"], "").0, exit::PARSE_ERROR);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["catalog", "show", "nope"], "").0, exit::USAGE);
        assert_eq!(run_str(&["catalog", "export", "type-iv"], "").0, exit::USAGE);
        assert_eq!(run_str(&["frobnicate"], "").0, exit::USAGE);
    }

    #[test]
    fn show_type_iv_mentions_homogeneity() {
        let (code, out, _) = run_str(&["catalog", "show", "type-iv"], "");
        assert_eq!(code, exit::SUCCESS);
        assert!(out.contains("This Bol algebra is not homogeneous"));
        assert!(out.contains("fails B2"));
    }

    #[test]
    fn torsion_commands_round_trip() {
        let (_, text, _) = run_str(&["catalog", "export", "type-i"], "");
        let (code, torsion, _) = run_str(&["to-torsion", "-"], &text);
        assert_eq!(code, exit::SUCCESS);
        let (code, back, _) = run_str(&["from-torsion", "-"], &torsion);
        assert_eq!(code, exit::SUCCESS);
        assert_eq!(back, text);
    }
}
