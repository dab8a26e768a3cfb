//! The `paleylab` command surface: `field`, `graph`, `check` and `survey`.
//!
//! [`run`] takes the argument vector and output sinks and returns the process
//! exit code: 0 when every check passes, 1 when any fails, 2 on invalid input
//! or cap violations.

mod check;
mod commands;

pub use check::{parse_props, run_checks, CheckResult, Prop, Report};
pub use commands::{survey_rows, SurveyRow};

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;

pub const DEFAULT_Q_CAP: u64 = 65536;
pub const DEFAULT_EC_N_CAP: usize = 4;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Dot,
    Edges,
    Json,
    Table,
}

/// Resolved settings shared by all subcommands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub q_cap: u64,
    pub ec_n_cap: usize,
    pub output_format: Option<OutputFormat>,
    pub json: bool,
    pub jobs: Option<usize>,
    pub file: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            q_cap: DEFAULT_Q_CAP,
            ec_n_cap: DEFAULT_EC_N_CAP,
            output_format: None,
            json: false,
            jobs: None,
            file: None,
        }
    }
}

impl Config {
    fn wants_json(&self) -> bool {
        self.json || self.output_format == Some(OutputFormat::Json)
    }

    fn check_q(&self, q: u64) -> Result<(), Error> {
        if q > self.q_cap {
            Err(Error::CapExceeded {
                what: "q",
                value: q,
                cap: self.q_cap,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "paleylab", version, about = "Finite fields and Paley-type Cayley graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub out: Option<OutputFormat>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    /// Worker threads for exhaustive searches.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest field order accepted.
    #[arg(long, global = true, env = "PALEYLAB_Q_CAP")]
    pub q_cap: Option<u64>,
    /// Emit reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Paley,
    Cubic,
    Quadruple,
    Gpaley,
    Mpaley,
    Pstar,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct GF(p^n) and print its elements and power table.
    Field {
        p: u64,
        n: u32,
        /// Modulus, e.g. "x^2+x+2"; defaults to the canonical irreducible.
        #[arg(long)]
        poly: Option<String>,
        /// Print the power table of the primitive element.
        #[arg(long)]
        tables: bool,
    },
    /// Build a graph: `paley Q`, `cubic Q`, `quadruple Q`, `gpaley Q K`, `mpaley Q M`, `pstar Q`.
    Graph {
        family: FamilyName,
        #[arg(required = true)]
        params: Vec<u64>,
    },
    /// Build a graph and verify properties.
    Check {
        family: FamilyName,
        #[arg(required = true)]
        params: Vec<u64>,
        /// Comma-separated: regular, complete, connected, srg, selfcomp,
        /// symmetric, ec:<n>, pmnk:<m>,<n>,<k>
        #[arg(long, default_value = "regular,connected")]
        props: String,
    },
    /// Tabulate m-Paley graphs over ranges of q and m.
    Survey {
        #[arg(long, default_value = "mpaley")]
        family: String,
        /// Inclusive range `A..B` of field orders.
        #[arg(long)]
        q_range: String,
        /// Inclusive range `C..D` of exponents.
        #[arg(long)]
        m_range: String,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_PRECONDITION
                }
            };
        }
    };
    let config = Config {
        q_cap: cli.global.q_cap.unwrap_or(DEFAULT_Q_CAP),
        ec_n_cap: DEFAULT_EC_N_CAP,
        output_format: cli.global.out,
        json: cli.global.json,
        jobs: cli.global.jobs,
        file: cli.global.file.clone(),
    };
    match commands::dispatch(&cli.command, &config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_PRECONDITION
        }
    }
}
