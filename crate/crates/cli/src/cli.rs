//! Argument parsing and command execution.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use kpath::graph::{read_graph, ParseError};
use kpath::{Algorithm, Graph, TrialReport};

use crate::bench::{run_bench, BenchConfig, Family, DEFAULT_DC_KMAX};
use crate::dispatch::{count, decide, CountAlgo};
use crate::verify::{run_verify, VerifyConfig};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kpath",
    version,
    about = "Randomized and exact k-path detection and counting"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the graph contains a simple path on k vertices.
    Decide(DecideArgs),
    /// Count simple k-vertex paths exactly.
    Count(CountArgs),
    /// Cross-check all engines on small generated graphs.
    Verify(VerifyArgs),
    /// Time every engine for k = 2..=kmax and report growth factors.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge-list file, or "-" for standard input.
    #[arg(long)]
    input: PathBuf,
    /// Number of path vertices.
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct DecideArgs {
    #[command(flatten)]
    common: InputArgs,
    /// dfs, color-coding, divide-color, count-ie, count-colorful or algebraic.
    #[arg(long)]
    algo: Algorithm,
    /// Trial budget for randomized engines.
    #[arg(long)]
    trials: Option<u64>,
    /// Include a witness path when the engine produces one.
    #[arg(long)]
    witness: bool,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    common: InputArgs,
    #[arg(long, value_enum)]
    algo: CountAlgo,
    /// Comma-separated 1-based color per vertex.
    #[arg(long, value_delimiter = ',')]
    colors: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    #[arg(long, default_value_t = 200)]
    graphs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 8)]
    kmax: usize,
    #[arg(long, value_enum, default_value_t = Family::Path)]
    family: Family,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON-lines file; records are appended.
    #[arg(long)]
    out: PathBuf,
    /// Largest k given to divide-and-color.
    #[arg(long, default_value_t = DEFAULT_DC_KMAX)]
    dc_kmax: usize,
    /// Comma-separated engines to time (default: all).
    #[arg(long, value_delimiter = ',')]
    algos: Option<Vec<Algorithm>>,
}

fn load_graph(path: &Path) -> Result<Graph, ParseError> {
    if path == Path::new("-") {
        read_graph(io::stdin().lock())
    } else {
        read_graph(BufReader::new(File::open(path)?))
    }
}

fn emit(out: &mut dyn Write, report: &TrialReport) -> io::Result<()> {
    serde_json::to_writer(&mut *out, report)?;
    writeln!(out)
}

fn fail(err: &mut dyn Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_ERROR
}

fn produces_witness(algo: Algorithm) -> bool {
    matches!(algo, Algorithm::Dfs | Algorithm::ColorCoding)
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
        }
    };
    match cli.command {
        Command::Decide(a) => cmd_decide(a, out, err),
        Command::Count(a) => cmd_count(a, out, err),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Bench(a) => cmd_bench(a, out, err),
    }
}

fn cmd_decide(a: DecideArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let g = match load_graph(&a.common.input) {
        Ok(g) => g,
        Err(e) => return fail(err, format_args!("{}: {e}", a.common.input.display())),
    };
    if a.witness && !produces_witness(a.algo) {
        let _ = writeln!(err, "note: {} does not produce witnesses", a.algo);
    }
    match decide(&g, a.common.k, a.algo, a.trials, a.common.seed, a.witness) {
        Ok(report) => {
            if emit(out, &report).is_err() {
                return EXIT_ERROR;
            }
            if report.decision.is_yes() {
                EXIT_YES
            } else {
                EXIT_NO
            }
        }
        Err(e) => fail(err, e),
    }
}

fn cmd_count(a: CountArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let g = match load_graph(&a.common.input) {
        Ok(g) => g,
        Err(e) => return fail(err, format_args!("{}: {e}", a.common.input.display())),
    };
    match count(&g, a.common.k, a.algo, a.colors, a.common.seed) {
        Ok(report) => match emit(out, &report) {
            Ok(()) => EXIT_YES,
            Err(_) => EXIT_ERROR,
        },
        Err(e) => fail(err, e),
    }
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> i32 {
    let cfg = VerifyConfig {
        max_n: a.max_n,
        graphs: a.graphs,
        seed: a.seed,
        inject_fault: a.inject_fault,
    };
    let summary = run_verify(&cfg);
    for o in &summary.outcomes {
        let tag = if o.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag}  {} ({} cases)", o.check.name(), o.cases);
    }
    let failures: Vec<_> = summary
        .outcomes
        .iter()
        .filter_map(|o| o.failure.as_ref().map(|f| (o.check, f)))
        .collect();
    for (check, ce) in &failures {
        let _ = writeln!(out, "\ncounterexample for \"{}\":\n{ce}", check.name());
    }
    let passed = summary.outcomes.len() - failures.len();
    let _ = writeln!(
        out,
        "{passed}/{} checks passed over {} graphs",
        summary.outcomes.len(),
        summary.graphs
    );
    if summary.all_passed() {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cfg = BenchConfig {
        kmax: a.kmax,
        family: a.family,
        reps: a.reps,
        seed: a.seed,
        out: a.out,
        dc_kmax: a.dc_kmax,
        algorithms: a.algos.unwrap_or_else(|| Algorithm::ALL.to_vec()),
    };
    match run_bench(&cfg) {
        Ok(growth) => {
            let _ = writeln!(
                out,
                "{:<16}{:>10}  median seconds per k",
                "engine", "growth"
            );
            for e in &growth {
                let factor = e
                    .growth
                    .map_or_else(|| "-".to_owned(), |g| format!("{g:.3}"));
                let times: Vec<String> = e
                    .medians
                    .iter()
                    .map(|(k, t)| format!("{k}:{t:.3e}"))
                    .collect();
                let _ = writeln!(
                    out,
                    "{:<16}{:>10}  {}",
                    e.algorithm.name(),
                    factor,
                    times.join(" ")
                );
            }
            EXIT_YES
        }
        Err(e) => fail(err, e),
    }
}
