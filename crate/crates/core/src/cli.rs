//! Command-line front end.
//!
//! Exit status: `0` on success (at least one solution, a valid grid, or a
//! finished sieve), `1` when there is no solution or the grid is invalid,
//! `2` on usage, input or parse errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::grid::{parse, render_grid, Format, Grid, GridError};
use crate::sieve::primes_up_to;
use crate::solver::{solve, SolveError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_SOLUTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Generic,
    Classic,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Generic => Format::Generic,
            OutputFormat::Classic => Format::Classic,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bitsudoku",
    version,
    about = "Solve and count n²×n² Sudoku puzzles"
)]
pub struct RunConfig {
    /// Output format for grids
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Generic)]
    pub format: OutputFormat,

    /// Print a `solutions=.. trials=.. passes=..` line
    #[arg(long, global = true)]
    pub stats: bool,

    /// Maximum number of solutions to keep (and, for `solve`, print)
    #[arg(long, global = true, default_value_t = 1)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a solution of the puzzle
    Solve {
        /// Puzzle file, or `-` for standard input
        input: PathBuf,
        /// Stop after this many solutions (default: the cap, at least 1)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
    },
    /// Count the solutions of the puzzle
    Count {
        /// Puzzle file, or `-` for standard input
        input: PathBuf,
        /// Stop counting after this many solutions
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
    },
    /// Check that a complete grid is a valid Sudoku matrix
    Check {
        /// Grid file, or `-` for standard input
        input: PathBuf,
    },
    /// Print the primes up to N, one per line
    Sieve { n: usize },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
}

type Outcome = Result<i32, Failure>;

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn load_grid(path: &PathBuf, stdin: &mut dyn Read) -> Result<Grid, Failure> {
    let text = read_input(path, stdin)?;
    let doc = parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(doc.to_grid())
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Usage(format!("writing output: {e}"))
}

fn check_format(grid: &Grid, format: Format) -> Result<(), Failure> {
    if format == Format::Classic && grid.order() != 3 {
        return Err(Failure::Usage(
            GridError::UnsupportedFormat {
                format,
                order: grid.order(),
            }
            .to_string(),
        ));
    }
    Ok(())
}

fn execute(
    cfg: &RunConfig,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let format = Format::from(cfg.format);
    match &cfg.command {
        Command::Solve { input, limit } => {
            let grid = load_grid(input, stdin)?;
            check_format(&grid, format)?;
            let cap = cfg.cap.max(1);
            let limit = limit.unwrap_or(cap as u64);
            let report = match solve(&grid, cap, Some(limit)) {
                Ok(r) => r,
                Err(SolveError::Conflict(c)) => {
                    writeln!(err, "inconsistent clues: {c}").map_err(io_failure)?;
                    writeln!(out, "UNSOLVABLE").map_err(io_failure)?;
                    if cfg.stats {
                        writeln!(out, "solutions=0 trials=0 passes=0").map_err(io_failure)?;
                    }
                    return Ok(EXIT_NO_SOLUTION);
                }
                Err(e) => return Err(Failure::Usage(e.to_string())),
            };
            if report.solutions.is_empty() {
                writeln!(out, "UNSOLVABLE").map_err(io_failure)?;
            }
            for (idx, solution) in report.solutions.iter().enumerate() {
                if idx > 0 {
                    writeln!(out).map_err(io_failure)?;
                }
                let text =
                    render_grid(solution, format).map_err(|e| Failure::Usage(e.to_string()))?;
                out.write_all(text.as_bytes()).map_err(io_failure)?;
            }
            if cfg.stats {
                writeln!(out, "{}", report.stats_line()).map_err(io_failure)?;
            }
            Ok(if report.solution_count > 0 {
                EXIT_OK
            } else {
                EXIT_NO_SOLUTION
            })
        }
        Command::Count { input, limit } => {
            let grid = load_grid(input, stdin)?;
            let report = match solve(&grid, cfg.cap, *limit) {
                Ok(r) => r,
                Err(SolveError::Conflict(c)) => {
                    writeln!(err, "inconsistent clues: {c}").map_err(io_failure)?;
                    let line = if cfg.stats {
                        "solutions=0 trials=0 passes=0"
                    } else {
                        "solutions=0"
                    };
                    writeln!(out, "{line}").map_err(io_failure)?;
                    return Ok(EXIT_NO_SOLUTION);
                }
                Err(e) => return Err(Failure::Usage(e.to_string())),
            };
            if cfg.stats {
                writeln!(out, "{}", report.stats_line()).map_err(io_failure)?;
            } else {
                writeln!(out, "solutions={}", report.count_label()).map_err(io_failure)?;
            }
            Ok(if report.solution_count > 0 {
                EXIT_OK
            } else {
                EXIT_NO_SOLUTION
            })
        }
        Command::Check { input } => {
            let grid = load_grid(input, stdin)?;
            let valid = match grid.is_sudoku_matrix() {
                Ok(v) => v,
                Err(e) => {
                    writeln!(err, "{e}").map_err(io_failure)?;
                    false
                }
            };
            if !valid {
                if let Some(c) = grid.first_conflict() {
                    writeln!(err, "{c}").map_err(io_failure)?;
                }
            }
            writeln!(out, "{}", if valid { "VALID" } else { "INVALID" }).map_err(io_failure)?;
            Ok(if valid { EXIT_OK } else { EXIT_NO_SOLUTION })
        }
        Command::Sieve { n } => {
            let mut buf = io::BufWriter::new(out);
            for p in primes_up_to(*n) {
                writeln!(buf, "{p}").map_err(io_failure)?;
            }
            buf.flush().map_err(io_failure)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs a parsed configuration and returns the process exit status.
pub fn run(cfg: &RunConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cfg, stdin, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, stdin, out, err),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            }
        }
    }
}
