//! Command-line front end: `solve`, `exact`, `bench` and `info`.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on data errors (unreadable
//! or malformed graphs and configs).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bench::{self, DatasetSpec, ReportFormat, SuiteConfig};
use crate::datasets;
use crate::error::Error;
use crate::graph::{summarize, Graph};
use crate::io::{self, GraphFormat};
use crate::oracle::{max_clique_exact, Budget};
use crate::solver::{self, ReinforcementMode, SolverConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "clique-swarm",
    version,
    about = "Maximum-clique search with ant colonies and a swarm-tuned pheromone update"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one solver on one graph and print the best clique.
    Solve(SolveArgs),
    /// Solve exactly with branch and bound.
    Exact(ExactArgs),
    /// Repeated seeded runs, aggregated into Best/Avg/Std/Run-time tables.
    Bench(BenchArgs),
    /// Vertex, edge and degree counts.
    Info(InfoArgs),
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Graph file (.net, .gml, or edge list), or a catalog name such as `karate`.
    graph: String,
    /// Override format detection.
    #[arg(long, value_parser = parse_graph_format)]
    input_format: Option<GraphFormat>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    input: GraphArg,
    #[arg(long, default_value = "aco_pso", value_parser = parse_algo)]
    algo: ReinforcementMode,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    iterations: Option<usize>,
    /// Solver settings as a flat `key = value` file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the per-iteration log (JSON lines) here.
    #[arg(long)]
    log: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[command(flatten)]
    input: GraphArg,
    /// Give up after this many seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Graph files or catalog names; added to those of --config.
    graphs: Vec<String>,
    /// Suite file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', value_parser = parse_algo)]
    algo: Vec<ReinforcementMode>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    iterations: Option<usize>,
    /// Base seed; run k uses seed + k.
    #[arg(long)]
    seed: Option<u64>,
    /// Annotate rows with the exact optimum.
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value = "markdown", value_parser = parse_report_format)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the per-run records as JSON.
    #[arg(long)]
    raw: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InfoArgs {
    #[command(flatten)]
    input: GraphArg,
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

fn parse_algo(s: &str) -> Result<ReinforcementMode, String> {
    s.parse()
}

fn parse_report_format(s: &str) -> Result<ReportFormat, String> {
    s.parse()
}

fn parse_graph_format(s: &str) -> Result<GraphFormat, String> {
    s.parse()
}

/// Resolve a graph argument: an existing file first, then a catalog entry.
pub fn load_graph(name: &str, format: Option<GraphFormat>) -> Result<Graph, Error> {
    let path = Path::new(name);
    if path.exists() {
        return io::read_graph(path, format);
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(name);
    match datasets::find(name).or_else(|| datasets::find(stem)) {
        Some(d) => d.load(None),
        None => Err(Error::Io {
            path: path.to_path_buf(),
            source: std::io::Error::new(
                std::io::ErrorKind::NotFound,
                "no such file or catalog dataset",
            ),
        }),
    }
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn labels(g: &Graph, members: &[usize]) -> Vec<String> {
    members.iter().map(|&v| g.label(v)).collect()
}

fn solve(a: SolveArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Error> {
    let g = load_graph(&a.input.graph, a.input.input_format)?;
    let mut cfg = match &a.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|source| Error::Io {
                path: p.clone(),
                source,
            })?;
            SolverConfig::from_toml_str(&text)?
        }
        None => SolverConfig::default(),
    };
    cfg.reinforcement_mode = a.algo;
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Some(i) = a.iterations {
        cfg.iterations = i;
    }
    let rec = solver::run(&g, &cfg)?;
    let _ = writeln!(stderr, "wall time: {:.3}s", rec.wall_time.as_secs_f64());
    if let Some(p) = &a.log {
        std::fs::write(p, rec.to_jsonl()).map_err(|source| Error::Io {
            path: p.clone(),
            source,
        })?;
    }
    let text = match a.format {
        TextFormat::Text => format!(
            "algorithm: {}\nseed: {}\niterations: {}\nbest size: {}\nbest clique: {}\n",
            cfg.reinforcement_mode,
            cfg.seed,
            cfg.iterations,
            rec.best.size(),
            labels(&g, rec.best.members()).join(" ")
        ),
        TextFormat::Json => {
            json!({
                "algorithm": cfg.reinforcement_mode.algorithm_name(),
                "seed": cfg.seed,
                "iterations": cfg.iterations,
                "best_size": rec.best.size(),
                "best": rec.best.members(),
                "labels": labels(&g, rec.best.members()),
            })
            .to_string()
                + "\n"
        }
    };
    emit(a.out.as_deref(), &text, stdout)
}

fn exact(a: ExactArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Error> {
    let g = load_graph(&a.input.graph, a.input.input_format)?;
    let budget = match a.time_limit {
        Some(s) if s.is_finite() && s >= 0.0 => Budget::time(Duration::from_secs_f64(s)),
        Some(s) => {
            return Err(crate::error::ConfigError::Invalid(format!("bad time limit {s}")).into())
        }
        None => Budget::unlimited(),
    };
    let r = max_clique_exact(&g, budget);
    let _ = writeln!(
        stderr,
        "wall time: {:.3}s, {} search nodes",
        r.elapsed.as_secs_f64(),
        r.explored_nodes
    );
    let text = match a.format {
        TextFormat::Text => format!(
            "optimum size: {}\ncompleted: {}\nclique: {}\n",
            r.optimum_size,
            r.completed,
            labels(&g, r.best.members()).join(" ")
        ),
        TextFormat::Json => {
            json!({
                "optimum_size": r.optimum_size,
                "completed": r.completed,
                "best": r.best.members(),
                "labels": labels(&g, r.best.members()),
                "explored_nodes": r.explored_nodes,
            })
            .to_string()
                + "\n"
        }
    };
    emit(a.out.as_deref(), &text, stdout)
}

fn bench_cmd(a: BenchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Error> {
    let mut suite = match &a.config {
        Some(p) => SuiteConfig::from_file(p)?,
        None => SuiteConfig::default(),
    };
    for name in &a.graphs {
        let spec = if Path::new(name).exists() {
            DatasetSpec::from_path(name.clone(), name)
        } else {
            let d = datasets::find(name).ok_or_else(|| Error::Dataset {
                name: name.clone(),
                reason: "no such file or catalog dataset".into(),
            })?;
            DatasetSpec::from_catalog(d.id, d.key)
        };
        suite.datasets.push(spec);
    }
    if suite.datasets.is_empty() {
        return Err(crate::error::ConfigError::Invalid("no datasets given".into()).into());
    }
    if !a.algo.is_empty() {
        suite.algorithms = a.algo.clone();
    }
    if let Some(r) = a.runs {
        suite.runs = r;
    }
    if let Some(i) = a.iterations {
        suite.iterations = i;
    }
    if let Some(s) = a.seed {
        suite.base_seed = s;
    }
    suite.oracle_check |= a.oracle;
    let report = bench::run_suite(&suite)?;
    let failed: usize = report.rows.iter().map(|r| r.failures.len()).sum();
    if failed > 0 {
        let _ = writeln!(stderr, "{failed} run failure(s), see report annotations");
    }
    if let Some(p) = &a.raw {
        let text = serde_json::to_string_pretty(&report.raw).expect("raw runs serialize");
        std::fs::write(p, text).map_err(|source| Error::Io {
            path: p.clone(),
            source,
        })?;
    }
    emit(
        a.out.as_deref(),
        &bench::emit_report(&report, a.format)?,
        stdout,
    )
}

fn info(a: InfoArgs, stdout: &mut dyn Write) -> Result<(), Error> {
    let g = load_graph(&a.input.graph, a.input.input_format)?;
    let s = summarize(&g);
    let mut text = match a.format {
        TextFormat::Text => s.to_string() + "\n",
        TextFormat::Json => serde_json::to_string(&s).expect("summary serializes") + "\n",
    };
    if g.dropped_self_loops() > 0 && matches!(a.format, TextFormat::Text) {
        text.push_str(&format!("dropped self-loops: {}\n", g.dropped_self_loops()));
    }
    emit(None, &text, stdout)
}

/// Parse `args` (program name first) and run the chosen command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => solve(a, stdout, stderr),
        Command::Exact(a) => exact(a, stdout, stderr),
        Command::Bench(a) => bench_cmd(a, stdout, stderr),
        Command::Info(a) => info(a, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DATA
        }
    }
}
