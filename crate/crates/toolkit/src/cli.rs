//! Command-line front end.
//!
//! Exit codes: 0 success or valid, 1 invalid labeling or sweep discrepancy,
//! 2 usage, parameter or parse error, 3 solver budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dandelion_core::{construct, dandelion, verify, EsStatus, SearchBudget, Solver};

use crate::clock::InstantClock;
use crate::sweep::{self, SweepConfig};
use crate::{dot, format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "dandelion",
    version,
    about = "Edge irregularity strength of dandelion graphs"
)]
pub struct Cli {
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for sweeps (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Search-tree node limit for the exact solver.
    #[arg(long, global = true)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock limit in milliseconds for the exact solver.
    #[arg(long, global = true)]
    pub budget_ms: Option<u64>,
    /// Reserved. Every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct Mode {
    /// Emit the Case 1 formulas as written, even if they collide.
    #[arg(long)]
    pub verbatim: bool,
    /// Fall back to the p2 = 3 variant when the Case 1 formulas collide (default).
    #[arg(long)]
    pub repair: bool,
}

impl Mode {
    fn allow_repair(&self) -> bool {
        !self.verbatim
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the dandelion D(n,l).
    Gen { n: u32, l: u32 },
    /// Construct, verify and print the labeling for D(n,l).
    Label {
        n: u32,
        l: u32,
        #[command(flatten)]
        mode: Mode,
    },
    /// Verify a labeling file against a graph file.
    Verify { graph: PathBuf, labeling: PathBuf },
    /// Compute es(D(n,l)) exactly.
    Es { n: u32, l: u32 },
    /// Construct (and optionally solve) every D(n,l) in a grid; CSV on stdout.
    Sweep {
        l_min: u32,
        l_max: u32,
        n_max: u32,
        /// Run the exact solver for n up to this value.
        #[arg(long)]
        exact_up_to: Option<u32>,
        #[command(flatten)]
        mode: Mode,
        /// Leave the timing columns empty so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

impl Cli {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.budget_nodes,
            max_time: self.budget_ms.map(Duration::from_millis),
            max_k: None,
        }
    }
}

struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn pick_format(
    requested: Option<Format>,
    default: Format,
    allowed: &[Format],
) -> Result<Format, Failure> {
    let f = requested.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure(
            EXIT_USAGE,
            format!("--format {:?} is not supported here", f).to_lowercase(),
        ))
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Gen { n, l } => {
            let format = pick_format(cli.format, Format::Json, &[Format::Json, Format::Dot])?;
            let g = dandelion(*n, *l)?;
            let text = match format {
                Format::Dot => dot::to_dot(&g, None),
                _ => format::graph_to_json(&g),
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Label { n, l, mode } => {
            let format = pick_format(cli.format, Format::Json, &[Format::Json, Format::Dot])?;
            let built = construct(*n, *l, mode.allow_repair())?;
            let text = match format {
                Format::Dot => dot::to_dot(&dandelion(*n, *l)?, Some(&built.labeling)),
                _ => format::construction_to_json(&built),
            };
            out.write_all(text.as_bytes())?;
            Ok(if built.report.valid {
                EXIT_OK
            } else {
                EXIT_INVALID
            })
        }
        Command::Verify { graph, labeling } => {
            pick_format(cli.format, Format::Json, &[Format::Json])?;
            let read = |p: &PathBuf| {
                std::fs::read_to_string(p)
                    .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", p.display())))
            };
            let g = format::graph_from_json(&read(graph)?)
                .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", graph.display())))?;
            let lab = format::labeling_from_json(&read(labeling)?)
                .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", labeling.display())))?;
            let report = verify(&g, &lab)?;
            out.write_all(format::report_to_json(&report).as_bytes())?;
            Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Es { n, l } => {
            pick_format(cli.format, Format::Json, &[Format::Json])?;
            let g = dandelion(*n, *l)?;
            let clock = InstantClock::start();
            let result = Solver::new(cli.budget()).with_clock(&clock).es_exact(&g)?;
            out.write_all(format::es_to_json(&g, &result).as_bytes())?;
            Ok(match result.status {
                EsStatus::Exact { .. } => EXIT_OK,
                EsStatus::Unknown { .. } => EXIT_UNKNOWN,
                EsStatus::InfeasibleAt { .. } => EXIT_INVALID,
            })
        }
        Command::Sweep {
            l_min,
            l_max,
            n_max,
            exact_up_to,
            mode,
            no_timing,
        } => {
            pick_format(cli.format, Format::Csv, &[Format::Csv])?;
            let config = SweepConfig {
                l_min: *l_min,
                l_max: *l_max,
                n_max: *n_max,
                exact_up_to: *exact_up_to,
                allow_repair: mode.allow_repair(),
                budget: cli.budget(),
                jobs: cli.jobs,
                timing: !no_timing,
            };
            let (records, summary) = sweep::run(&config)?;
            sweep::write_csv(&mut *out, &records)?;
            writeln!(
                err,
                "instances={} discrepancies={} exact_solved={} exact_unknown={} mode={}",
                summary.instances,
                summary.discrepancies,
                summary.exact_solved,
                summary.exact_unknown,
                if config.allow_repair {
                    "repair"
                } else {
                    "verbatim"
                },
            )?;
            Ok(if summary.discrepancies == 0 {
                EXIT_OK
            } else {
                EXIT_INVALID
            })
        }
    }
}
