//! Repeated seeded runs over a set of graphs and algorithms, aggregated into
//! Best / Avg / Std / Run-time tables.
//!
//! Run `k` of every (dataset, algorithm) pair uses seed `base_seed + k`, so a
//! suite is reproducible run for run. Runs execute on the rayon pool; the
//! report is assembled in a fixed (dataset, algorithm, run) order, so
//! parallelism never changes it.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::datasets;
use crate::error::{ConfigError, Error};
use crate::graph::{is_clique, is_maximal, Clique, Graph};
use crate::io::{self, GraphFormat};
use crate::oracle::{max_clique_exact, Budget};
use crate::solver::{self, ReinforcementMode, SolverConfig};

/// One graph of a suite.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetSpec {
    /// Row label in the report.
    pub name: String,
    /// Graph file. Takes precedence over `catalog`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<GraphFormat>,
    /// Key or row id in [`datasets::CATALOG`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    /// Solver settings applied on top of the suite's base config.
    #[serde(default, skip_serializing_if = "toml::Table::is_empty")]
    pub overrides: toml::Table,
    #[serde(skip)]
    pub graph: Option<Arc<Graph>>,
}

impl DatasetSpec {
    pub fn from_graph(name: impl Into<String>, g: Graph) -> Self {
        Self {
            name: name.into(),
            graph: Some(Arc::new(g)),
            ..Default::default()
        }
    }

    pub fn from_catalog(name: impl Into<String>, key: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            catalog: Some(key.into()),
            ..Default::default()
        }
    }

    pub fn from_path(name: impl Into<String>, path: impl Into<PathBuf>) -> Self {
        Self {
            name: name.into(),
            path: Some(path.into()),
            ..Default::default()
        }
    }

    fn load(&self, base_dir: Option<&Path>, data_dir: Option<&Path>) -> Result<Arc<Graph>, Error> {
        let named = |e: Error| Error::Dataset {
            name: self.name.clone(),
            reason: e.to_string(),
        };
        if let Some(g) = &self.graph {
            return Ok(g.clone());
        }
        if let Some(path) = &self.path {
            let path = match base_dir {
                Some(dir) if path.is_relative() => dir.join(path),
                _ => path.clone(),
            };
            return io::read_graph(&path, self.format)
                .map(Arc::new)
                .map_err(named);
        }
        if let Some(key) = &self.catalog {
            let entry = datasets::find(key).ok_or_else(|| Error::Dataset {
                name: self.name.clone(),
                reason: format!("`{key}` is not in the dataset catalog"),
            })?;
            return entry.load(data_dir).map(Arc::new).map_err(named);
        }
        Err(Error::Dataset {
            name: self.name.clone(),
            reason: "no path, catalog key or graph given".into(),
        })
    }
}

/// A whole experiment: graphs × algorithms × seeded runs.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(rename = "dataset")]
    pub datasets: Vec<DatasetSpec>,
    pub algorithms: Vec<ReinforcementMode>,
    pub runs: usize,
    pub iterations: usize,
    pub base_seed: u64,
    /// Base solver settings; `iterations`, `seed` and the reinforcement mode
    /// are overwritten per run.
    pub solver: SolverConfig,
    /// Solve each graph exactly and annotate rows with the optimum.
    pub oracle_check: bool,
    /// Wall-clock budget for each exact solve.
    pub oracle_budget_secs: f64,
    /// Where catalog datasets that are not bundled are looked up.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data_dir: Option<PathBuf>,
    /// Relative dataset paths resolve against this directory.
    #[serde(skip)]
    pub base_dir: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            datasets: Vec::new(),
            algorithms: vec![ReinforcementMode::Pso, ReinforcementMode::QualityGap],
            runs: 10,
            iterations: 1000,
            base_seed: 1,
            solver: SolverConfig::default(),
            oracle_check: false,
            oracle_budget_secs: 60.0,
            data_dir: None,
            base_dir: None,
        }
    }
}

impl SuiteConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, ConfigError> {
        let cfg: Self = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Read a suite file; relative dataset paths resolve against its directory.
    pub fn from_file(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut cfg = Self::from_toml_str(&text)?;
        cfg.base_dir = path.parent().map(Path::to_path_buf);
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.runs == 0 {
            return Err(ConfigError::Invalid("runs must be at least 1".into()));
        }
        if self.iterations == 0 {
            return Err(ConfigError::Invalid("iterations must be at least 1".into()));
        }
        if self.algorithms.is_empty() {
            return Err(ConfigError::Invalid("no algorithms selected".into()));
        }
        let mut names = BTreeSet::new();
        for d in &self.datasets {
            if !names.insert(d.name.as_str()) {
                return Err(ConfigError::Invalid(format!(
                    "dataset name `{}` used twice",
                    d.name
                )));
            }
        }
        self.solver.validate()
    }

    fn run_config(
        &self,
        overrides: &toml::Table,
        mode: ReinforcementMode,
        run: usize,
    ) -> Result<SolverConfig, ConfigError> {
        let mut cfg = self.solver.patched(overrides)?;
        cfg.reinforcement_mode = mode;
        cfg.iterations = self.iterations;
        cfg.seed = self.base_seed + run as u64;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Result of one run inside a suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawRun {
    pub dataset: String,
    pub algorithm: ReinforcementMode,
    pub run_index: usize,
    pub seed: u64,
    pub best_size: usize,
    pub best: Clique,
    pub wall_time_secs: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Aggregates of one (dataset, algorithm) pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub dataset: String,
    pub algorithm: ReinforcementMode,
    /// Runs that finished and produced a verified clique.
    pub runs: usize,
    pub best: usize,
    pub avg: f64,
    pub std: f64,
    /// Mean wall time per run, seconds.
    pub run_time: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimum: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl ReportRow {
    /// Some(true) when the best run matched a completed exact solve.
    pub fn reaches_optimum(&self) -> Option<bool> {
        self.optimum.map(|o| self.best == o)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnvironmentInfo {
    pub os: String,
    pub arch: String,
    pub threads: usize,
    pub version: String,
}

impl EnvironmentInfo {
    pub fn current() -> Self {
        Self {
            os: std::env::consts::OS.into(),
            arch: std::env::consts::ARCH.into(),
            threads: rayon::current_num_threads(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkReport {
    pub rows: Vec<ReportRow>,
    pub raw: Vec<RawRun>,
    pub environment: EnvironmentInfo,
}

/// (best, mean, population standard deviation) of per-run best sizes.
/// All zero for an empty slice.
pub fn aggregate(sizes: &[usize]) -> (usize, f64, f64) {
    if sizes.is_empty() {
        return (0, 0.0, 0.0);
    }
    let n = sizes.len() as f64;
    let best = *sizes.iter().max().unwrap();
    let mean = sizes.iter().map(|&s| s as f64).sum::<f64>() / n;
    let var = sizes
        .iter()
        .map(|&s| (s as f64 - mean).powi(2))
        .sum::<f64>()
        / n;
    (best, mean, var.sqrt())
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    payload
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| payload.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "run panicked".into())
}

impl BenchmarkReport {
    /// Rows and raw runs of one algorithm only.
    pub fn for_algorithm(&self, mode: ReinforcementMode) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .filter(|r| r.algorithm == mode)
                .cloned()
                .collect(),
            raw: self
                .raw
                .iter()
                .filter(|r| r.algorithm == mode)
                .cloned()
                .collect(),
            environment: self.environment.clone(),
        }
    }

    /// Copy with every timing zeroed, for byte-level comparisons.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        r.rows.iter_mut().for_each(|row| row.run_time = 0.0);
        r.raw.iter_mut().for_each(|raw| raw.wall_time_secs = 0.0);
        r
    }

    pub fn row(&self, dataset: &str, mode: ReinforcementMode) -> Option<&ReportRow> {
        self.rows
            .iter()
            .find(|r| r.dataset == dataset && r.algorithm == mode)
    }

    /// Recompute every row's statistics from `raw` and check they agree.
    pub fn verify_aggregates(&self) -> Result<(), String> {
        for row in &self.rows {
            let sizes: Vec<usize> = self
                .raw
                .iter()
                .filter(|r| {
                    r.dataset == row.dataset && r.algorithm == row.algorithm && r.error.is_none()
                })
                .map(|r| r.best_size)
                .collect();
            let (best, avg, std) = aggregate(&sizes);
            if best != row.best || (avg - row.avg).abs() > 1e-12 || (std - row.std).abs() > 1e-12 {
                return Err(format!(
                    "row {}/{} disagrees with raw runs",
                    row.dataset, row.algorithm
                ));
            }
            if sizes.len() != row.runs {
                return Err(format!(
                    "row {}/{} counts {} runs, raw has {}",
                    row.dataset,
                    row.algorithm,
                    row.runs,
                    sizes.len()
                ));
            }
        }
        Ok(())
    }
}

/// Run `f`, turning a panic into its message.
fn contained<T>(f: impl FnOnce() -> T) -> Result<T, String> {
    catch_unwind(AssertUnwindSafe(f)).map_err(panic_message)
}

fn run_one(g: &Graph, dataset: &str, cfg: SolverConfig, run_index: usize) -> RawRun {
    let seed = cfg.seed;
    let mode = cfg.reinforcement_mode;
    let (best, wall_time_secs, error) = match contained(|| solver::run(g, &cfg)) {
        Ok(Ok(rec)) => {
            let verified =
                is_clique(g, rec.best.members()).unwrap_or(false) && is_maximal(g, &rec.best);
            let error = (!verified)
                .then(|| format!("run {run_index} returned an invalid clique {}", rec.best));
            (rec.best, rec.wall_time.as_secs_f64(), error)
        }
        Ok(Err(e)) => (Clique::empty(), 0.0, Some(e.to_string())),
        Err(msg) => (Clique::empty(), 0.0, Some(msg)),
    };
    RawRun {
        dataset: dataset.to_owned(),
        algorithm: mode,
        run_index,
        seed,
        best_size: best.size(),
        best,
        wall_time_secs,
        error,
    }
}

/// Execute every run of the suite and aggregate.
///
/// Fails before running anything if a dataset cannot be loaded or a run
/// config is invalid. A run that panics is recorded as a failure on its row.
pub fn run_suite(cfg: &SuiteConfig) -> Result<BenchmarkReport, Error> {
    cfg.validate()?;
    let graphs = cfg
        .datasets
        .iter()
        .map(|d| d.load(cfg.base_dir.as_deref(), cfg.data_dir.as_deref()))
        .collect::<Result<Vec<_>, _>>()?;

    let mut jobs = Vec::new();
    for (di, d) in cfg.datasets.iter().enumerate() {
        if graphs[di].is_empty() {
            return Err(Error::Dataset {
                name: d.name.clone(),
                reason: "graph has no vertices".into(),
            });
        }
        for &mode in &cfg.algorithms {
            for k in 0..cfg.runs {
                jobs.push((di, cfg.run_config(&d.overrides, mode, k)?, k));
            }
        }
    }

    let raw: Vec<RawRun> = jobs
        .into_par_iter()
        .map(|(di, run_cfg, k)| run_one(&graphs[di], &cfg.datasets[di].name, run_cfg, k))
        .collect();

    let optima: Vec<Option<usize>> = if cfg.oracle_check {
        let budget = Budget::time(Duration::from_secs_f64(cfg.oracle_budget_secs));
        graphs
            .par_iter()
            .map(|g| {
                let r = max_clique_exact(g, budget);
                r.completed.then_some(r.optimum_size)
            })
            .collect()
    } else {
        vec![None; graphs.len()]
    };

    let mut rows = Vec::new();
    for (di, d) in cfg.datasets.iter().enumerate() {
        for &mode in &cfg.algorithms {
            let runs: Vec<&RawRun> = raw
                .iter()
                .filter(|r| r.dataset == d.name && r.algorithm == mode)
                .collect();
            let ok: Vec<&RawRun> = runs.iter().copied().filter(|r| r.error.is_none()).collect();
            let sizes: Vec<usize> = ok.iter().map(|r| r.best_size).collect();
            let (best, avg, std) = aggregate(&sizes);
            let run_time = if ok.is_empty() {
                0.0
            } else {
                ok.iter().map(|r| r.wall_time_secs).sum::<f64>() / ok.len() as f64
            };
            let mut failures: Vec<String> = runs
                .iter()
                .filter_map(|r| {
                    r.error
                        .as_ref()
                        .map(|e| format!("run {}: {e}", r.run_index))
                })
                .collect();
            if let Some(o) = optima[di] {
                if best > o {
                    failures.push(format!("best {best} exceeds exact optimum {o}"));
                }
            }
            rows.push(ReportRow {
                dataset: d.name.clone(),
                algorithm: mode,
                runs: ok.len(),
                best,
                avg,
                std,
                run_time,
                optimum: optima[di],
                failures,
            });
        }
    }
    Ok(BenchmarkReport {
        rows,
        raw,
        environment: EnvironmentInfo::current(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "markdown" | "md" | "text" => Ok(Self::Markdown),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown report format `{other}`")),
        }
    }
}

const FOOTER: &str = "Std is the population standard deviation of the per-run best sizes. \
Run-time is the mean wall-clock seconds per run on this machine.";

/// Render a report. Output depends only on the report.
pub fn emit_report(r: &BenchmarkReport, format: ReportFormat) -> Result<String, Error> {
    if r.rows.is_empty() {
        return Err(Error::EmptyReport);
    }
    Ok(match format {
        ReportFormat::Markdown => markdown(r),
        ReportFormat::Csv => csv_table(r),
        ReportFormat::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
    })
}

fn algorithms_in_order(r: &BenchmarkReport) -> Vec<ReinforcementMode> {
    let mut seen = Vec::new();
    for row in &r.rows {
        if !seen.contains(&row.algorithm) {
            seen.push(row.algorithm);
        }
    }
    seen
}

fn markdown(r: &BenchmarkReport) -> String {
    let mut out = String::new();
    for mode in algorithms_in_order(r) {
        writeln!(out, "### {mode}\n").unwrap();
        writeln!(out, "| Graph | Best | Avg | Std | Run-time |").unwrap();
        writeln!(out, "|---|---:|---:|---:|---:|").unwrap();
        let rows: Vec<&ReportRow> = r.rows.iter().filter(|row| row.algorithm == mode).collect();
        for row in &rows {
            writeln!(
                out,
                "| {} | {} | {:.3} | {:.3} | {:.2} |",
                row.dataset, row.best, row.avg, row.std, row.run_time
            )
            .unwrap();
        }
        let notes: Vec<String> = rows
            .iter()
            .flat_map(|row| {
                let optimum = row.optimum.map(|o| {
                    let tag = if row.best == o {
                        "reached"
                    } else {
                        "not reached"
                    };
                    format!("- {}: exact optimum {o} ({tag})", row.dataset)
                });
                optimum.into_iter().chain(
                    row.failures
                        .iter()
                        .map(|f| format!("- {}: FAILED {f}", row.dataset)),
                )
            })
            .collect();
        if !notes.is_empty() {
            writeln!(out).unwrap();
            for n in notes {
                writeln!(out, "{n}").unwrap();
            }
        }
        writeln!(out).unwrap();
    }
    writeln!(out, "{FOOTER}").unwrap();
    out
}

fn csv_table(r: &BenchmarkReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "Graph",
        "Best",
        "Avg",
        "Std",
        "Run-time",
        "Algorithm",
        "Runs",
        "Optimum",
        "Failures",
    ])
    .unwrap();
    for row in &r.rows {
        w.write_record([
            row.dataset.clone(),
            row.best.to_string(),
            format!("{:.3}", row.avg),
            format!("{:.3}", row.std),
            format!("{:.2}", row.run_time),
            row.algorithm.to_string(),
            row.runs.to_string(),
            row.optimum.map(|o| o.to_string()).unwrap_or_default(),
            row.failures.join("; "),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

/// Side-by-side deltas of two reports over the same datasets.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    pub label_a: String,
    pub label_b: String,
    pub rows: Vec<ComparisonRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub dataset: String,
    pub best_a: usize,
    pub best_b: usize,
    /// `best_a - best_b`
    pub best_delta: i64,
    pub avg_a: f64,
    pub avg_b: f64,
    /// `avg_a - avg_b`
    pub avg_delta: f64,
}

impl ComparisonRow {
    /// `+` when A is ahead (best first, then avg), `-` when B is, `=` on a tie.
    pub fn sign(&self) -> char {
        match self.best_delta.cmp(&0) {
            std::cmp::Ordering::Greater => '+',
            std::cmp::Ordering::Less => '-',
            std::cmp::Ordering::Equal if self.avg_delta > 5e-4 => '+',
            std::cmp::Ordering::Equal if self.avg_delta < -5e-4 => '-',
            std::cmp::Ordering::Equal => '=',
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "A = {}, B = {}", self.label_a, self.label_b)?;
        writeln!(
            f,
            "| Graph | Best A | Best B | dBest | Avg A | Avg B | dAvg | |"
        )?;
        writeln!(f, "|---|---:|---:|---:|---:|---:|---:|---|")?;
        for r in &self.rows {
            writeln!(
                f,
                "| {} | {} | {} | {:+} | {:.3} | {:.3} | {:+.3} | {} |",
                r.dataset,
                r.best_a,
                r.best_b,
                r.best_delta,
                r.avg_a,
                r.avg_b,
                r.avg_delta,
                r.sign()
            )?;
        }
        let count = |c: char| self.rows.iter().filter(|r| r.sign() == c).count();
        write!(
            f,
            "A ahead: {}, B ahead: {}, tied: {}",
            count('+'),
            count('-'),
            count('=')
        )
    }
}

fn rows_by_dataset(r: &BenchmarkReport) -> Result<HashMap<&str, &ReportRow>, Error> {
    let mut map = HashMap::new();
    for row in &r.rows {
        if map.insert(row.dataset.as_str(), row).is_some() {
            return Err(Error::Dataset {
                name: row.dataset.clone(),
                reason: "report holds several algorithms for this dataset; filter with for_algorithm first".into(),
            });
        }
    }
    Ok(map)
}

/// Compare `a` against `b` dataset by dataset. Both reports must cover the
/// same datasets with one row each.
pub fn compare(a: &BenchmarkReport, b: &BenchmarkReport) -> Result<Comparison, Error> {
    if a.rows.is_empty() || b.rows.is_empty() {
        return Err(Error::EmptyReport);
    }
    let ma = rows_by_dataset(a)?;
    let mb = rows_by_dataset(b)?;
    let ka: BTreeSet<&str> = ma.keys().copied().collect();
    let kb: BTreeSet<&str> = mb.keys().copied().collect();
    if ka != kb {
        return Err(Error::DatasetMismatch {
            only_a: ka.difference(&kb).map(|s| s.to_string()).collect(),
            only_b: kb.difference(&ka).map(|s| s.to_string()).collect(),
        });
    }
    let label = |r: &BenchmarkReport| {
        algorithms_in_order(r)
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join("+")
    };
    let rows = a
        .rows
        .iter()
        .map(|ra| {
            let rb = mb[ra.dataset.as_str()];
            ComparisonRow {
                dataset: ra.dataset.clone(),
                best_a: ra.best,
                best_b: rb.best,
                best_delta: ra.best as i64 - rb.best as i64,
                avg_a: ra.avg,
                avg_b: rb.avg,
                avg_delta: ra.avg - rb.avg,
            }
        })
        .collect();
    Ok(Comparison {
        label_a: label(a),
        label_b: label(b),
        rows,
    })
}
