//! `lhcone` command line: every analysis in the library as a subcommand.
//!
//! Exit status is 0 on success, 1 when a predicate-style command answers
//! "no" (`gor` on a non-Gorenstein cone, `product` without a product form,
//! `crosscheck` with disagreeing verdicts) and 2 on usage or input errors.

mod commands;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lhcone::{EnumerationError, ExactInt, GcdError, GorensteinError, SequenceError};
use thiserror::Error;

pub use render::Format;

/// Version of the JSON layout, emitted as `"schema"` in every object.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "lhcone",
    version,
    about = "Gorenstein lecture hall cones, h*-vectors and recurrence gcds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
}

/// A sequence given as `--seq TEXT`, or as `--l/--b` (recurrence) or
/// `--k/--l` ((k,l)-sequence) together with `--n`.
#[derive(Debug, Args)]
struct SeqArgs {
    /// rec:l,b | kl:k,l | ell:l | u:u1,u2,...;s1 | onemodk:k | list:s1,s2,...
    #[arg(long)]
    seq: Option<String>,
    /// Number of terms
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "l", allow_negative_numbers = true)]
    ell: Option<ExactInt>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<ExactInt>,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<ExactInt>,
}

#[derive(Debug, Args)]
struct RecArgs {
    #[arg(long = "l", allow_negative_numbers = true)]
    ell: ExactInt,
    #[arg(long, allow_negative_numbers = true)]
    b: ExactInt,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the lecture hall cone is Gorenstein
    Gor {
        #[command(flatten)]
        seq: SeqArgs,
        /// Test a simple cone given as a matrix file instead (one row per line)
        #[arg(long, conflicts_with_all = ["seq", "ell", "b", "k"])]
        matrix: Option<PathBuf>,
    },
    /// Weight series (--m) or Ehrhart counts (--t) by direct enumeration
    Series {
        #[command(flatten)]
        seq: SeqArgs,
        /// Truncation degree of the weight series
        #[arg(long, required_unless_present = "t", conflicts_with = "t")]
        m: Option<usize>,
        /// Largest dilation for Ehrhart counts
        #[arg(long)]
        t: Option<usize>,
    },
    /// h*-vector of the lecture hall polytope
    Hstar {
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// Numerator H(q) of the weight generating function
    Numerator {
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// Look for a product form prod 1/(1-q^e) of the weight series
    Product {
        #[command(flatten)]
        seq: SeqArgs,
        /// Truncation degree (default: twice the sum of the denominator exponents)
        #[arg(long)]
        m: Option<usize>,
    },
    /// gcd(s_{n+1}, s_n) normalized by t^{n-1} sigma^{floor(n/2)}
    GcdTable {
        #[command(flatten)]
        rec: RecArgs,
        /// Number of rows
        #[arg(long)]
        n: usize,
    },
    /// r, t, sigma, gamma, beta for a recurrence
    Profile {
        #[command(flatten)]
        rec: RecArgs,
    },
    /// Index from which the normalized terms stay above t(r+|b|)
    N0 {
        #[command(flatten)]
        rec: RecArgs,
        /// Width of the verification window
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Summarize what is known about a sequence
    Classify {
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// Compare the cone test with palindromicity of H and h*
    Crosscheck {
        #[command(flatten)]
        seq: SeqArgs,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Gorenstein(#[from] GorensteinError),
    #[error(transparent)]
    Gcd(#[from] GcdError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// Parse `args` (program name first), run, and write to the given streams.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    match commands::execute(cli.command) {
        Ok((output, verdict)) => {
            let _ = stdout.write_all(output.render(cli.format).as_bytes());
            if verdict {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
