//! The `lckc` command line.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lckc_core::{Algorithm, Clustering, Instance, PointSet, RadiusMode, RadiusSearchConfig};

use crate::config::{RunFile, SweepTable};
use crate::dataset::{load, slice_temporal, DatasetConfig, Loaded, Normalization, Preset};
use crate::error::{config, Error, Result};
use crate::harness::{bench_scalability, plain_k_center, setup1_history, setup1_new_data, setup2_evolve, timed_solve, BenchSpec, HistAlgo, SweepSpec};
use crate::oracle_check::{self, CheckConfig, LabelMode};
use crate::records::{write_labels, write_provenance, write_records, Budget, ExperimentRecord};

#[derive(Debug, Parser)]
#[command(name = "lckc", version, about = "Label-consistent k-center solvers and experiments")]
struct Cli {
    /// Worker threads for sweep cells (LCKC_THREADS overrides).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Log one line per finished cell.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one instance and write its record and labels.
    Solve(SolveArgs),
    /// New-data sweep over k and budget lists.
    Sweep(SweepArgs),
    /// Evolving-data run over temporal slices.
    Evolve(EvolveArgs),
    /// Runtime grid over dataset prefixes.
    Bench(BenchArgs),
    /// Check the solvers against the brute-force oracle on random instances.
    OracleCheck(OracleArgs),
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long)]
    k: usize,
    /// Relabeling budget: an integer or frac:X.
    #[arg(long)]
    b: Budget,
    /// carve, fft or file.
    #[arg(long, default_value = "carve")]
    hist: String,
    /// Labels file used with --hist file.
    #[arg(long)]
    hist_file: Option<PathBuf>,
    /// gap, overcover or overcover-exact.
    #[arg(long, default_value = "gap")]
    alg: Algorithm,
    /// exact, exact-linear or geom:EPS.
    #[arg(long, default_value = "exact")]
    radius: RadiusMode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    refine: bool,
    #[arg(long)]
    out: PathBuf,
    /// Labels output (default: <out> with a .labels.csv suffix).
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GridArgs {
    /// Run file whose [sweep] table seeds the grid; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    #[arg(long)]
    hist: Option<HistAlgo>,
    #[arg(long, value_delimiter = ',')]
    alg: Vec<Algorithm>,
    #[arg(long, value_delimiter = ',')]
    seeds: Vec<u64>,
    /// Single seed; shorthand for --seeds.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    radius: Option<RadiusMode>,
    #[arg(long)]
    refine: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Budgets: integers or frac:X, comma separated.
    #[arg(long, value_delimiter = ',')]
    b: Vec<Budget>,
}

#[derive(Debug, Args)]
struct EvolveArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Number of slices.
    #[arg(long)]
    t: Option<usize>,
    /// Budget fractions per slice, e.g. 0.2,0.6.
    #[arg(long, value_delimiter = ',')]
    budget_frac: Vec<f64>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_delimiter = ',')]
    b: Vec<Budget>,
    /// Prefix sizes.
    #[arg(long, value_delimiter = ',')]
    n_prefix: Vec<usize>,
}

#[derive(Debug, Args)]
struct DataArgs {
    /// A TOML run file with a [dataset] table, or a CSV file.
    #[arg(long)]
    data: Option<PathBuf>,
    /// Dataset recipe: abalone, electric, onlineretail, twitter or uber.
    #[arg(long)]
    preset: Option<Preset>,
    /// Feature columns of a CSV file (default: all columns).
    #[arg(long, value_delimiter = ',')]
    columns: Vec<String>,
    /// Timestamp column of a CSV file (join several with `+`).
    #[arg(long)]
    timestamp_column: Option<String>,
    /// Per-column normalization: none, zscore or minmax.
    #[arg(long)]
    normalize: Option<Normalization>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 200)]
    instances: usize,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draw historical labels at random instead of nearest-center.
    #[arg(long)]
    arbitrary_labels: bool,
}

fn csv_width(path: &Path, delimiter: char) -> Result<usize> {
    let mut r = csv::ReaderBuilder::new().delimiter(delimiter as u8).has_headers(false).from_path(path)?;
    match r.records().next() {
        Some(rec) => Ok(rec?.len()),
        None => Err(Error::Empty(path.to_owned())),
    }
}

/// Resolves `--data` and its companions into a dataset config plus the
/// `[sweep]` table of a run file, if any.
fn dataset_config(data: &Path, extra: &DataArgs) -> Result<(DatasetConfig, Option<SweepTable>)> {
    let (mut cfg, sweep) = if data.extension().is_some_and(|e| e == "toml") {
        let run = RunFile::read(data)?;
        (run.dataset, run.sweep)
    } else {
        (DatasetConfig::new(data, &[]), None)
    };
    if extra.preset.is_some() {
        cfg.preset = extra.preset;
    }
    if !extra.columns.is_empty() {
        cfg.feature_columns = extra.columns.clone();
    }
    if extra.timestamp_column.is_some() {
        cfg.timestamp_column = extra.timestamp_column.clone();
    }
    if let Some(n) = extra.normalize {
        cfg.normalization = n;
    }
    cfg = cfg.with_preset_defaults();
    if cfg.feature_columns.is_empty() {
        cfg.feature_columns = (0..csv_width(&cfg.path, cfg.delimiter)?).map(|i| i.to_string()).collect();
    }
    Ok((cfg, sweep))
}

fn provenance(cfg: &DatasetConfig, argv: &[OsString]) -> Vec<(&'static str, String)> {
    let args: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    vec![
        ("dataset", cfg.dataset_name()),
        ("path", cfg.path.display().to_string()),
        ("normalization", cfg.normalization.name().to_owned()),
        ("command", args.join(" ")),
        ("version", env!("CARGO_PKG_VERSION").to_owned()),
    ]
}

fn finish(records: &[ExperimentRecord], out: &Path, cfg: &DatasetConfig, argv: &[OsString]) -> Result<()> {
    write_records(records, out)?;
    write_provenance(out, &provenance(cfg, argv))?;
    log::info!("wrote {} records to {}", records.len(), out.display());
    Ok(())
}

fn labels_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().unwrap_or_default().to_string_lossy();
    out.with_file_name(format!("{stem}.labels.csv"))
}

fn cmd_solve(a: &SolveArgs, argv: &[OsString]) -> Result<()> {
    let data = a.data.data.as_ref().ok_or_else(|| config("--data is required"))?;
    let (cfg, _) = dataset_config(data, &a.data)?;
    let Loaded { mut points, .. } = load(&cfg)?;
    points.cache_distances(crate::harness::CACHE_LIMIT);
    let radius = RadiusSearchConfig::new(a.radius);
    let (hist_name, hist): (&str, Clustering) = match a.hist.as_str() {
        "file" => {
            let path = a.hist_file.as_ref().ok_or_else(|| config("--hist file needs --hist-file"))?;
            ("file", crate::records::read_labels(path, points.len(), points.dim())?)
        }
        other => {
            let h: HistAlgo = other.parse()?;
            let hist = if 3 * a.k <= points.len() {
                setup1_history(&points, a.k, h, &radius, a.seed)?
            } else {
                log::warn!("fewer than 3k points: history is a plain {h} clustering of the whole set");
                plain_k_center(&points, a.k, h, &radius, a.seed)?.0
            };
            (h.name(), hist)
        }
    };
    let budget = a.b.resolve(points.len());
    let inst = Instance::new(&points, a.k, &hist, budget)?;
    let sol = timed_solve(&inst, a.alg, &radius, a.seed, a.refine)?;
    let record = ExperimentRecord {
        setup: "solve".into(),
        dataset: cfg.dataset_name(),
        hist_algo: hist_name.into(),
        algo: a.alg.name().into(),
        k: a.k,
        b: Some(Budget::Absolute(budget)),
        slice: None,
        cost: sol.cost,
        updates: sol.reassignments,
        runtime: sol.elapsed,
        seed: a.seed,
        radius_used: sol.radius.get(),
    };
    finish(&[record], &a.out, &cfg, argv)?;
    write_labels(&a.labels.clone().unwrap_or_else(|| labels_path(&a.out)), &points, &sol.clustering)?;
    if !sol.feasible {
        return Err(lckc_core::Error::Infeasible { forced: sol.reassignments, budget }.into());
    }
    Ok(())
}

fn grid_spec(
    data: &DataArgs,
    grid: &GridArgs,
    threads: Option<usize>,
) -> Result<(DatasetConfig, SweepSpec, Option<SweepTable>)> {
    let (cfg, table) = match (&data.data, &grid.config) {
        (Some(path), _) | (None, Some(path)) => dataset_config(path, data)?,
        (None, None) => return Err(config("--data or --config is required")),
    };
    let table = match (&grid.config, table) {
        (Some(path), None) if data.data.is_some() => RunFile::read(path)?.sweep,
        (_, t) => t,
    };
    let mut spec = SweepSpec::new(cfg.dataset_name(), vec![], vec![]);
    if let Some(t) = &table {
        t.apply(&mut spec)?;
    }
    if !grid.k.is_empty() {
        spec.k_list = grid.k.clone();
    }
    if let Some(h) = grid.hist {
        spec.hist_algo = h;
    }
    if !grid.alg.is_empty() {
        spec.algo_list = grid.alg.clone();
    }
    if !grid.seeds.is_empty() {
        spec.seeds = grid.seeds.clone();
    } else if let Some(s) = grid.seed {
        spec.seeds = vec![s];
    }
    if let Some(r) = grid.radius {
        spec.radius.mode = r;
    }
    spec.refine |= grid.refine;
    if threads.is_some() {
        spec.threads = threads;
    }
    if spec.k_list.is_empty() {
        return Err(config("--k is required"));
    }
    Ok((cfg, spec, table))
}

fn cmd_sweep(a: &SweepArgs, threads: Option<usize>, argv: &[OsString]) -> Result<()> {
    let (cfg, mut spec, _) = grid_spec(&a.data, &a.grid, threads)?;
    if !a.b.is_empty() {
        spec.budget_list = a.b.clone();
    }
    if spec.budget_list.is_empty() {
        return Err(config("--b is required"));
    }
    let points = load(&cfg)?.points;
    let records = setup1_new_data(&points, &spec)?;
    finish(&records, &a.grid.out, &cfg, argv)
}

fn cmd_evolve(a: &EvolveArgs, threads: Option<usize>, argv: &[OsString]) -> Result<()> {
    let (cfg, mut spec, table) = grid_spec(&a.data, &a.grid, threads)?;
    if !a.budget_frac.is_empty() {
        spec.budget_list = a.budget_frac.iter().map(|&f| format!("frac:{f}").parse()).collect::<Result<_>>()?;
    }
    if spec.budget_list.is_empty() {
        return Err(config("--budget-frac is required"));
    }
    let t = a.t.or(table.and_then(|t| t.t)).ok_or_else(|| config("--t is required"))?;
    let Loaded { points, timestamps, .. } = load(&cfg)?;
    let stamps = timestamps.unwrap_or_else(|| {
        log::warn!("{}: no timestamp column, slicing in file order", cfg.path.display());
        (0..points.len() as i64).collect()
    });
    let slices = slice_temporal(&points, &stamps, t)?;
    let records = setup2_evolve(&slices, &spec)?;
    finish(&records, &a.grid.out, &cfg, argv)
}

fn cmd_bench(a: &BenchArgs, threads: Option<usize>, argv: &[OsString]) -> Result<()> {
    let (cfg, spec, table) = grid_spec(&a.data, &a.grid, threads)?;
    let points: PointSet = load(&cfg)?.points;
    let mut n_prefix_list = a.n_prefix.clone();
    if n_prefix_list.is_empty() {
        n_prefix_list = table.map(|t| t.n_prefix_list).unwrap_or_default();
    }
    if n_prefix_list.is_empty() {
        n_prefix_list = vec![points.len()];
    }
    let b_list = if a.b.is_empty() { spec.budget_list.clone() } else { a.b.clone() };
    if b_list.is_empty() {
        return Err(config("--b is required"));
    }
    let bench = BenchSpec {
        dataset: spec.dataset,
        k_list: spec.k_list,
        b_list,
        n_prefix_list,
        algo_list: spec.algo_list,
        seeds: spec.seeds,
        hist_algo: spec.hist_algo,
        radius: spec.radius,
    };
    let records = bench_scalability(&points, &bench)?;
    finish(&records, &a.grid.out, &cfg, argv)
}

/// Returns whether every check passed.
fn cmd_oracle(a: &OracleArgs) -> Result<bool> {
    let labels = if a.arbitrary_labels { LabelMode::Arbitrary } else { LabelMode::Nearest };
    let cfg = CheckConfig { instances: a.instances, max_n: a.max_n, max_k: a.max_k, seed: a.seed, labels };
    let measured = oracle_check::run(&cfg)?;
    let mut failed = 0;
    for v in measured.iter().flat_map(|m| &m.violations) {
        failed += 1;
        eprintln!("FAIL {v} (reproduce: lckc oracle-check --instances 1 --seed {} --max-n {} --max-k {}{})",
            v.seed, a.max_n, a.max_k, if a.arbitrary_labels { " --arbitrary-labels" } else { "" });
    }
    let worst = |f: fn(&oracle_check::Measured) -> f64| {
        measured.iter().filter(|m| m.optimum > 0.0).map(f).fold(0.0, f64::max)
    };
    eprintln!(
        "{} instances, {} checks, {failed} violations; worst ratios gap {:.4}, overcover {:.4}",
        a.instances,
        measured.len(),
        worst(|m| m.gap_cost / m.optimum),
        worst(|m| m.overcover_cost / m.optimum),
    );
    Ok(failed == 0)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Solver(lckc_core::Error::Infeasible { .. }) => 1,
        _ => 2,
    }
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let level = if cli.verbose { "info" } else { "warn" };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).try_init();

    let result = match &cli.command {
        Command::Solve(a) => cmd_solve(a, &argv).map(|_| true),
        Command::Sweep(a) => cmd_sweep(a, cli.threads, &argv).map(|_| true),
        Command::Evolve(a) => cmd_evolve(a, cli.threads, &argv).map(|_| true),
        Command::Bench(a) => cmd_bench(a, cli.threads, &argv).map(|_| true),
        Command::OracleCheck(a) => cmd_oracle(a),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("lckc: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}
