// SPDX-License-Identifier: Apache-2.0

//! `ramforge`: ramification reports, Belyi towers and pseudo-tame tests
//! for rational function fields over finite fields.

mod commands;
mod json;
mod plain;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ramforge::{Error, ErrorKind};

#[derive(Parser, Debug)]
#[command(name = "ramforge", version, about = "Ramification of covers of the projective line over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    p: u64,
    /// Extension degree; elements are written in the generator `z`.
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ramification report of the cover t = num/den.
    Analyze {
        #[command(flatten)]
        field: FieldArgs,
        /// Numerator, or the whole map `g/h`; omit with --seed for a random cover.
        num: Option<String>,
        /// Denominator.
        den: Option<String>,
        /// Draw a random cover of degree at most 8 instead of reading one.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Wild tower x -> t -> u -> y branched only over (y=inf).
    BelyiWild {
        #[command(flatten)]
        field: FieldArgs,
        /// Comma-separated finite places avoiding (x=0).
        #[arg(long, default_value = "")]
        places: String,
    },
    /// Tame map branched over (t=1) and (t=inf).
    BelyiTame {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "")]
        places: String,
    },
    /// Pseudo-tameness of x in characteristic 2.
    Pseudotame {
        #[command(flatten)]
        field: FieldArgs,
        x: String,
        /// Second separating element for the invariant a(x, y).
        y: Option<String>,
        /// Restrict the Laurent test to one place; also runs square completion there.
        #[arg(long)]
        at: Option<String>,
        /// Number of auxiliary pole places for square completion.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Laurent expansion at a place.
    Laurent {
        #[command(flatten)]
        field: FieldArgs,
        f: String,
        #[arg(long)]
        at: String,
        /// Number of terms from the leading exponent on.
        #[arg(long)]
        prec: Option<usize>,
    },
    /// Factorization into monic irreducibles.
    Factor {
        #[command(flatten)]
        field: FieldArgs,
        poly: String,
    },
    /// Field parameters: order, modulus and generator.
    Field {
        #[command(flatten)]
        field: FieldArgs,
    },
}

/// Everything a command emits.
pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
    /// Names of failed identity checks; nonempty means exit code 5.
    pub failed: Vec<String>,
}

/// An engine error tagged with the argument it came from.
pub struct CliError {
    pub error: Error,
    pub arg: Option<(&'static str, String)>,
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError { error, arg: None }
    }
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Parse => 2,
        ErrorKind::Precondition => 3,
        ErrorKind::SizeBound => 4,
        ErrorKind::Internal => 5,
    }
}

fn format_of(cmd: &Command) -> Format {
    match cmd {
        Command::Analyze { field, .. }
        | Command::BelyiWild { field, .. }
        | Command::BelyiTame { field, .. }
        | Command::Pseudotame { field, .. }
        | Command::Laurent { field, .. }
        | Command::Factor { field, .. }
        | Command::Field { field } => field.format,
    }
}

fn report_error(format: Format, e: &CliError) {
    let mut err = std::io::stderr().lock();
    match format {
        Format::Json => {
            let _ = writeln!(err, "{}", json::error(e));
        }
        Format::Text => {
            let _ = writeln!(err, "{}", plain::error(e));
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = format_of(&cli.command);
    match commands::run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let body = match format {
                Format::Json => serde_json::to_string(&out.json).expect("serializable"),
                Format::Text => out.text,
            };
            let _ = writeln!(stdout, "{}", body.trim_end());
            if out.failed.is_empty() {
                ExitCode::SUCCESS
            } else {
                let e = CliError::from(Error::Internal(format!("failed checks: {}", out.failed.join(", "))));
                report_error(format, &e);
                ExitCode::from(5)
            }
        }
        Err(e) => {
            report_error(format, &e);
            ExitCode::from(exit_code(e.error.kind()))
        }
    }
}
