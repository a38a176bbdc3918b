//! Command-line front end: generate instances, rank them, compute visibility
//! graphs, run the verification checks and render SVG views.
//!
//! Exit status: 0 success (all checks passed), 1 a check failed, 2 usage
//! error, 3 unreadable or malformed input file.

pub mod svg;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use unitsquares::factory::{lower_bound_instance, quadratic_instance, random_instance};
use unitsquares::format::{
    parse_graph, parse_instance, parse_ranking, serialize_graph, serialize_instance, serialize_ranking,
};
use unitsquares::geometry::{parse_rational, Rational};
use unitsquares::ranking::{lex_ranking, optimal_ranking, random_ranking};
use unitsquares::verify::{check_edge_bound, check_lower_bound, check_planarity, max_edges_bound, EXHAUSTIVE_LIMIT};
use unitsquares::visibility::{forced_edges, visibility_graph};
use unitsquares::{Instance, ParseError, Ranking, VisibilityGraph};

pub const SYNOPSIS: &str = "usage: unitsquares <generate|rank|graph|check|render> [options]  (see --help)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus {
    pub code: i32,
}

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus { code: 0 };
    pub const CHECK_FAILED: ExitStatus = ExitStatus { code: 1 };
    pub const USAGE: ExitStatus = ExitStatus { code: 2 };
    pub const INPUT: ExitStatus = ExitStatus { code: 3 };
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] unitsquares::Error),
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn status(&self) -> ExitStatus {
        match self {
            CliError::Parse { .. } | CliError::Read { .. } => ExitStatus::INPUT,
            CliError::Usage(_) | CliError::Core(_) | CliError::Write { .. } => ExitStatus::USAGE,
        }
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "unitsquares", version, about = "Rank unit squares and inspect their visibility graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated instance.
    Generate(GenerateArgs),
    /// Write a ranking of an instance.
    Rank(RankArgs),
    /// Write the visibility graph of a ranking, or the forced edges.
    Graph(GraphArgs),
    /// Run verification checks and print a report.
    Check(CheckArgs),
    /// Draw the ranked squares as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Lowerbound,
    Quadratic,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Lex,
    Input,
    Random,
    Optimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FixedStrategy {
    Lex,
    Input,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "1/16", value_parser = rational_arg)]
    delta: Rational,
    #[arg(long, default_value = "6", value_parser = rational_arg)]
    span: Rational,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
    /// Also write a ranking: the all-cross-pairs ranking for `quadratic`,
    /// input order otherwise.
    #[arg(long)]
    ranking_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[arg(long)]
    strategy: Strategy,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 9)]
    cap: usize,
    #[arg(short = 'i', long = "input")]
    input: PathBuf,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[arg(short = 'i', long = "input")]
    input: PathBuf,
    #[arg(long, conflicts_with = "strategy")]
    ranking: Option<PathBuf>,
    #[arg(long)]
    strategy: Option<FixedStrategy>,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Write the ranking-independent forced edges instead.
    #[arg(long, conflicts_with_all = ["ranking", "strategy"])]
    forced: bool,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(short = 'i', long = "input")]
    input: PathBuf,
    /// Lexicographic-ranking graph has a plane straight-line embedding.
    #[arg(long)]
    planarity: bool,
    /// Lexicographic-ranking graph has at most 3n−7 edges (all pairs for n ≤ 3).
    #[arg(long)]
    bound: bool,
    /// Every ranking has at least `--target` edges.
    #[arg(long)]
    lowerbound: bool,
    /// Defaults to 3n−7.
    #[arg(long, requires = "lowerbound")]
    target: Option<usize>,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Exhaustive enumeration runs up to min(8, cap) squares.
    #[arg(long, default_value_t = 9)]
    cap: usize,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(short = 'i', long = "input")]
    input: PathBuf,
    #[arg(long, conflicts_with = "strategy")]
    ranking: Option<PathBuf>,
    /// Defaults to lex.
    #[arg(long)]
    strategy: Option<FixedStrategy>,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn load<T>(path: &Path, parse: fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Write { path: PathBuf::from("<stdout>"), source }),
    }
}

fn resolve_ranking(
    inst: &Instance,
    file: Option<&Path>,
    strategy: Option<FixedStrategy>,
) -> Result<Ranking, CliError> {
    let rk = match (file, strategy) {
        (Some(path), _) => load(path, parse_ranking)?,
        (None, Some(FixedStrategy::Input)) => Ranking::identity(inst.len()),
        (None, Some(FixedStrategy::Lex) | None) => lex_ranking(inst),
    };
    if rk.len() != inst.len() {
        return Err(CliError::Core(unitsquares::Error::InvalidRanking(format!(
            "ranking has {} entries but the instance has {} squares",
            rk.len(),
            inst.len()
        ))));
    }
    Ok(rk)
}

fn generate(args: GenerateArgs) -> Result<ExitStatus, CliError> {
    let (inst, rk) = match args.kind {
        Kind::Lowerbound => {
            let inst = lower_bound_instance(args.n, &args.delta)?;
            let rk = Ranking::identity(inst.len());
            (inst, rk)
        }
        Kind::Quadratic => quadratic_instance(args.n, &args.delta)?,
        Kind::Random => {
            let inst = random_instance(args.n, &args.span, args.seed)?;
            let rk = Ranking::identity(inst.len());
            (inst, rk)
        }
    };
    let mut sink = std::io::sink();
    emit(Some(&args.output), &serialize_instance(&inst), &mut sink)?;
    if let Some(path) = &args.ranking_out {
        emit(Some(path), &serialize_ranking(&rk), &mut sink)?;
    }
    Ok(ExitStatus::SUCCESS)
}

fn rank(args: RankArgs, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let inst = load(&args.input, parse_instance)?;
    let rk = match args.strategy {
        Strategy::Lex => lex_ranking(&inst),
        Strategy::Input => Ranking::identity(inst.len()),
        Strategy::Random => random_ranking(inst.len(), args.seed),
        Strategy::Optimal => optimal_ranking(&inst, args.cap)?.0,
    };
    emit(args.output.as_deref(), &serialize_ranking(&rk), out)?;
    Ok(ExitStatus::SUCCESS)
}

fn graph(args: GraphArgs, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let inst = load(&args.input, parse_instance)?;
    let g = if args.forced {
        VisibilityGraph::new(inst.len(), forced_edges(&inst))?
    } else {
        if args.ranking.is_none() && args.strategy.is_none() {
            return Err(CliError::Usage("graph needs --ranking FILE, --strategy lex|input, or --forced".into()));
        }
        let rk = resolve_ranking(&inst, args.ranking.as_deref(), args.strategy)?;
        visibility_graph(&inst, &rk)?
    };
    emit(args.output.as_deref(), &serialize_graph(&g), out)?;
    Ok(ExitStatus::SUCCESS)
}

fn check(args: CheckArgs, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let inst = load(&args.input, parse_instance)?;
    let run_all = !(args.planarity || args.bound || args.lowerbound);
    let mut report = String::new();
    let mut ok = true;

    if args.planarity || args.bound || run_all {
        let g = visibility_graph(&inst, &lex_ranking(&inst))?;
        if args.planarity || run_all {
            let r = check_planarity(&inst, &g, "lex");
            ok &= r.verdict.passed();
            report.push_str(&r.to_string());
        }
        if args.bound || run_all {
            let r = check_edge_bound(&g, "lex");
            ok &= r.verdict.passed();
            report.push_str(&r.to_string());
        }
    }
    if args.lowerbound {
        let target = args.target.unwrap_or_else(|| max_edges_bound(inst.len()));
        let limit = EXHAUSTIVE_LIMIT.min(args.cap);
        let r = check_lower_bound(&inst, target, args.samples, args.seed, limit);
        ok &= r.verdict.passed();
        report.push_str(&r.to_string());
    }
    emit(args.output.as_deref(), &report, out)?;
    Ok(if ok { ExitStatus::SUCCESS } else { ExitStatus::CHECK_FAILED })
}

fn render(args: RenderArgs) -> Result<ExitStatus, CliError> {
    let inst = load(&args.input, parse_instance)?;
    let rk = resolve_ranking(&inst, args.ranking.as_deref(), args.strategy)?;
    let g = args.graph.as_deref().map(|p| load(p, parse_graph)).transpose()?;
    let text = svg::render_svg(&inst, &rk, g.as_ref())?;
    emit(Some(&args.output), &text, &mut std::io::sink())?;
    Ok(ExitStatus::SUCCESS)
}

/// Runs the CLI on `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return ExitStatus::SUCCESS;
        }
        Err(e) => {
            let first = e.to_string().lines().next().unwrap_or_default().to_string();
            let _ = writeln!(err, "{first}");
            let _ = writeln!(err, "{SYNOPSIS}");
            return ExitStatus::USAGE;
        }
    };
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Rank(a) => rank(a, out),
        Command::Graph(a) => graph(a, out),
        Command::Check(a) => check(a, out),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, CliError::Usage(_)) {
                let _ = writeln!(err, "{SYNOPSIS}");
            }
            e.status()
        }
    }
}
