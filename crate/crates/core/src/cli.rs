//! Command-line front end.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::gtpolytope::gromov_lower_bound;
use crate::gtsystem::gt_map;
use crate::io::{
    float_pattern_to_json, matrix_from_json, matrix_to_json, parse_lambda, pattern_from_json,
    report_to_json, skeleton_to_json,
};
use crate::reconstruct::reconstruct_matrix;
use crate::skeleton::skeleton_graph;
use crate::svg::plot_moment_polytope;
use crate::verify::{verify_all, VerifyOptions};

pub const EXIT_OK: u8 = 0;
/// Bad arguments, unreadable files, malformed input.
pub const EXIT_INPUT: u8 = 1;
/// Well-formed input outside the supported range.
pub const EXIT_UNSUPPORTED: u8 = 2;
/// A verification suite or internal consistency check failed.
pub const EXIT_VERIFY: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gtorbit",
    version,
    about = "Gelfand-Tsetlin polytopes of unitary coadjoint orbits"
)]
pub struct Cli {
    /// Eigensolver tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Edges at the good vertex and the Gromov width lower bound, as JSON.
    Analyze {
        /// Nonincreasing eigenvalues, e.g. 5,5,4 or 3/2,0,-1
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// GT pattern of a Hermitian matrix given as JSON.
    Pattern {
        /// Matrix file; standard input when omitted or "-".
        file: Option<PathBuf>,
    },
    /// A Hermitian matrix realizing an exact GT pattern given as JSON.
    Reconstruct {
        /// Pattern file; standard input when omitted or "-".
        file: Option<PathBuf>,
    },
    /// Vertices and edges of the moment polytope's 1-skeleton, as JSON.
    Skeleton {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Runs the randomized invariant suites.
    Verify {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// SVG of the moment polytope and its 1-skeleton (n = 3 only).
    Plot {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Output file; standard output when omitted or "-".
        out: Option<PathBuf>,
    },
}

/// Maps a library error to its exit status.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnsupportedSpectrum { .. } | Error::UnsupportedDimension(_) => EXIT_UNSUPPORTED,
        Error::Invariant(_) | Error::NoConvergence { .. } => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

enum Failure {
    Lib(Error),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn is_stdio(path: &Option<PathBuf>) -> bool {
    path.as_ref().is_none_or(|p| p.as_os_str() == "-")
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if !is_stdio(path) => {
            text =
                fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn write_output(path: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) if !is_stdio(path) => {
            fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
        }
        _ => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), Failure> {
    let tol = cli.tol;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Argument(format!("--tol must be positive, got {tol}")).into());
    }
    match cli.command {
        Command::Analyze { lambda } => {
            let (_, report) = gromov_lower_bound(&parse_lambda(&lambda)?)?;
            write_output(&None, &report_to_json(&report), stdout)
        }
        Command::Pattern { file } => {
            let a = matrix_from_json(&read_input(&file, stdin)?)?;
            write_output(&None, &float_pattern_to_json(&gt_map(&a, tol)?), stdout)
        }
        Command::Reconstruct { file } => {
            let p = pattern_from_json(&read_input(&file, stdin)?)?;
            let a = reconstruct_matrix::<_, f64>(&p, tol)?;
            write_output(&None, &matrix_to_json(&a), stdout)
        }
        Command::Skeleton { lambda } => {
            let g = skeleton_graph(&parse_lambda(&lambda)?);
            write_output(&None, &skeleton_to_json(&g), stdout)
        }
        Command::Verify {
            lambda,
            trials,
            seed,
        } => {
            let report = verify_all(
                &parse_lambda(&lambda)?,
                &VerifyOptions { trials, seed, tol },
            );
            write_output(&None, &format!("{report}\n"), stdout)?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
        Command::Plot { lambda, out } => {
            let svg = plot_moment_polytope(&parse_lambda(&lambda)?)?;
            write_output(&out, &svg, stdout)
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(cli, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Verify) => {
            let _ = writeln!(stderr, "error: verification failed");
            EXIT_VERIFY
        }
    }
}
