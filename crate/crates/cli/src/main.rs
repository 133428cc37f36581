//! `easter`: Easter dates by the astronomical rule and the classical computus.

use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use easter_core::golden::{parse_fixture, verify_rows, FixtureError, REFERENCE_FIXTURE};
use easter_core::report::{
    comparison_stats, easter_results, format_range, format_stats, format_year_report, RangeFormat,
};
use easter_core::{easter_result, paschal_context};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FIXTURE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "easter",
    version,
    about = "Astronomical, Catholic and Orthodox Easter dates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Easter dates for one year.
    Year {
        #[arg(allow_negative_numbers = true)]
        year: i32,
        /// Print every intermediate quantity of the astronomical computation.
        #[arg(long)]
        trace: bool,
    },
    /// One row per year over an inclusive range.
    Range {
        #[arg(long, allow_negative_numbers = true)]
        from: i32,
        #[arg(long, allow_negative_numbers = true)]
        to: i32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Histogram of astronomical minus catholic differences over a range.
    Stats {
        #[arg(long, allow_negative_numbers = true)]
        from: i32,
        #[arg(long, allow_negative_numbers = true)]
        to: i32,
    },
    /// Recompute a reference table and report every differing cell.
    Verify {
        /// CSV fixture; defaults to the bundled 1950–2050 table.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
}

impl From<Format> for RangeFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => RangeFormat::Table,
            Format::Csv => RangeFormat::Csv,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(easter_core::Error),
    Fixture(String),
    Internal(easter_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Fixture(_) => EXIT_FIXTURE,
            CliError::Internal(_) => 70,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(e) | CliError::Internal(e) => write!(f, "{e}"),
            CliError::Fixture(msg) => f.write_str(msg),
        }
    }
}

impl From<easter_core::Error> for CliError {
    fn from(e: easter_core::Error) -> Self {
        use easter_core::Error::*;
        match e {
            InvalidArgument(_) | YearOutOfRange(_) | JulianDayOutOfRange(_) => CliError::Usage(e),
            Bracket { .. } | Internal(_) => CliError::Internal(e),
        }
    }
}

/// Output plus the exit status it should produce.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Year { year, trace } => {
            let result = easter_result(year)?;
            let ctx = if trace {
                Some(paschal_context(year)?)
            } else {
                None
            };
            Ok(Outcome::ok(format_year_report(&result, ctx.as_ref())))
        }
        Command::Range { from, to, format } => {
            let results = easter_results(from, to)?;
            Ok(Outcome::ok(format_range(&results, format.into())))
        }
        Command::Stats { from, to } => {
            let stats = comparison_stats(&easter_results(from, to)?);
            Ok(Outcome::ok(format_stats(from, to, &stats)))
        }
        Command::Verify { fixture } => {
            let (text, origin) = match fixture {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        CliError::Fixture(format!("cannot read {}: {e}", path.display()))
                    })?;
                    (text, path.display().to_string())
                }
                None => (
                    REFERENCE_FIXTURE.to_string(),
                    "bundled reference table".to_string(),
                ),
            };
            let rows = parse_fixture(&text)
                .map_err(|e: FixtureError| CliError::Fixture(format!("{origin}: {e}")))?;
            let report = verify_rows(&rows);
            let code = if report.passed() { 0 } else { EXIT_MISMATCH };
            Ok(Outcome {
                stdout: report.to_string(),
                code,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(outcome) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
