//! Experiment protocols: new-data arrival (setup 1), evolving slices
//! (setup 2) and the runtime bench.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use lckc_core::clustering::CostExponent;
use lckc_core::fft::fft_indices;
use lckc_core::search::carve_k_center;
use lckc_core::{cost, delta, fft, solve, Algorithm, Center, CenterOrigin, Clustering, Instance, PointSet, RadiusSearchConfig, Solution};
use rayon::prelude::*;

use crate::error::{config, Error, Result};
use crate::records::{Budget, ExperimentRecord};

/// Point sets up to this size get a pairwise distance cache.
pub const CACHE_LIMIT: usize = 6000;

/// Environment variable overriding the worker pool size.
pub const THREADS_ENV: &str = "LCKC_THREADS";

/// Algorithm producing the historical clustering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HistAlgo {
    Carve,
    Fft,
}

impl HistAlgo {
    pub fn name(self) -> &'static str {
        match self {
            HistAlgo::Carve => "carve",
            HistAlgo::Fft => "fft",
        }
    }
}

impl fmt::Display for HistAlgo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HistAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "carve" => Ok(HistAlgo::Carve),
            "fft" => Ok(HistAlgo::Fft),
            _ => Err(config(format!("unknown historical algorithm `{s}` (want carve or fft)"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    /// Value of the `dataset` column.
    pub dataset: String,
    pub k_list: Vec<usize>,
    pub budget_list: Vec<Budget>,
    pub hist_algo: HistAlgo,
    pub algo_list: Vec<Algorithm>,
    pub seeds: Vec<u64>,
    pub radius: RadiusSearchConfig,
    pub refine: bool,
    /// Worker pool size; `None` uses one thread per core.
    pub threads: Option<usize>,
}

impl SweepSpec {
    pub fn new(dataset: impl Into<String>, k_list: Vec<usize>, budget_list: Vec<Budget>) -> Self {
        SweepSpec {
            dataset: dataset.into(),
            k_list,
            budget_list,
            hist_algo: HistAlgo::Carve,
            algo_list: vec![Algorithm::Gap, Algorithm::OverCoverGreedy],
            seeds: vec![0],
            radius: RadiusSearchConfig::default(),
            refine: false,
            threads: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_list.is_empty() || self.k_list.contains(&0) {
            return Err(config("k_list must hold positive values"));
        }
        if self.seeds.is_empty() {
            return Err(config("seeds is empty"));
        }
        if let Some(a) = self.algo_list.iter().find(|a| !a.is_label_consistent()) {
            return Err(config(format!("`{a}` is not a label-consistent solver")));
        }
        Ok(())
    }
}

/// One finished experiment cell with everything needed to re-check it.
#[derive(Debug, Clone)]
pub struct CellOutcome {
    pub record: ExperimentRecord,
    /// Historical clustering of the cell's point set.
    pub hist: Arc<Clustering>,
    pub solution: Clustering,
    /// Resolved relabeling budget; `None` for baselines.
    pub budget: Option<usize>,
}

/// Builds a worker pool; [`THREADS_ENV`] wins over `threads`.
pub fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let env = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok());
    let n = env.or(threads).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| config(e.to_string()))
}

/// [`solve`] with wall-clock time recorded in `elapsed`.
pub fn timed_solve(inst: &Instance<'_>, algo: Algorithm, cfg: &RadiusSearchConfig, seed: u64, refine: bool) -> Result<Solution> {
    let start = Instant::now();
    let mut sol = solve(inst, algo, cfg, seed, refine)?;
    sol.elapsed = start.elapsed().as_secs_f64();
    Ok(sol)
}

fn with_cache(ps: &PointSet) -> PointSet {
    let mut ps = ps.clone();
    ps.cache_distances(CACHE_LIMIT);
    ps
}

fn lift(centers: Vec<Center>, globals: &[usize], ps: &PointSet) -> Vec<Center> {
    centers
        .into_iter()
        .map(|c| match c.origin {
            CenterOrigin::DatasetIndex(i) => Center::from_point(ps, globals[i]),
            CenterOrigin::External => c,
        })
        .collect()
}

/// A plain k-center solution with nearest-center labels, plus its radius.
pub fn plain_k_center(ps: &PointSet, k: usize, algo: HistAlgo, cfg: &RadiusSearchConfig, seed: u64) -> Result<(Clustering, f64)> {
    let k = k.min(ps.len());
    let centers = match algo {
        HistAlgo::Carve => carve_k_center(ps, k, cfg.mode, seed)?.0,
        HistAlgo::Fft => fft(ps, k, seed)?,
    };
    let c = Clustering::nearest(ps, centers)?;
    let radius = cost(ps, &c, CostExponent::Infinity)?;
    Ok((c, radius))
}

/// Historical clustering for setup 1: FFT picks `3k` centers, `X'` is the
/// union of the clusters of the first `k` of them, `hist_algo` clusters `X'`
/// and every point of `X` is labeled with its nearest historical center.
pub fn setup1_history(ps: &PointSet, k: usize, hist_algo: HistAlgo, cfg: &RadiusSearchConfig, seed: u64) -> Result<Clustering> {
    let n = ps.len();
    if 3 * k > n {
        return Err(config(format!("setup 1 needs 3k <= n, got k={k}, n={n}")));
    }
    let order = fft_indices(ps, 3 * k, seed)?;
    let fft_centers: Vec<Center> = order.iter().map(|&i| Center::from_point(ps, i)).collect();
    let first = k.min(fft_centers.len());
    let subset: Vec<usize> =
        (0..n).filter(|&x| lckc_core::clustering::nearest_center(ps, &fft_centers, x).0 < first).collect();
    let sub = ps.select(&subset);
    let local = match hist_algo {
        HistAlgo::Carve => carve_k_center(&sub, k.min(sub.len()), cfg.mode, seed)?.0,
        HistAlgo::Fft => fft(&sub, k.min(sub.len()), seed)?,
    };
    Ok(Clustering::nearest(ps, lift(local, &subset, ps))?)
}

fn record(setup: &str, spec: &SweepSpec, algo: &str, k: usize, seed: u64) -> ExperimentRecord {
    ExperimentRecord {
        setup: setup.to_owned(),
        dataset: spec.dataset.clone(),
        hist_algo: spec.hist_algo.name().to_owned(),
        algo: algo.to_owned(),
        k,
        b: None,
        slice: None,
        cost: 0.0,
        updates: 0,
        runtime: 0.0,
        seed,
        radius_used: 0.0,
    }
}

fn solved_cell(
    inst: &Instance<'_>,
    spec: &SweepSpec,
    algo: Algorithm,
    seed: u64,
    mut rec: ExperimentRecord,
) -> Result<(ExperimentRecord, Clustering)> {
    let sol = timed_solve(inst, algo, &spec.radius, seed, spec.refine)?;
    rec.cost = sol.cost;
    rec.updates = sol.reassignments;
    rec.runtime = sol.elapsed;
    rec.radius_used = sol.radius.get();
    log::info!("{} k={} b={} seed={} {}: cost {:.6} updates {}", rec.setup, inst.k, inst.budget, seed, algo, sol.cost, sol.reassignments);
    Ok((rec, sol.clustering))
}

fn baseline_cell(
    ps: &PointSet,
    hist: &Clustering,
    spec: &SweepSpec,
    algo: HistAlgo,
    k: usize,
    seed: u64,
    mut rec: ExperimentRecord,
) -> Result<(ExperimentRecord, Clustering)> {
    let start = Instant::now();
    let (c, radius) = plain_k_center(ps, k, algo, &spec.radius, seed)?;
    rec.runtime = start.elapsed().as_secs_f64();
    rec.cost = radius;
    rec.radius_used = radius;
    rec.updates = delta(hist, &c)?;
    Ok((rec, c))
}

/// Setup 1 with the stored solutions of every cell.
pub fn setup1_outcomes(ps: &PointSet, spec: &SweepSpec) -> Result<Vec<CellOutcome>> {
    spec.validate()?;
    let ps = with_cache(ps);
    let n = ps.len();
    if let Some(&k) = spec.k_list.iter().find(|&&k| 3 * k > n) {
        return Err(config(format!("setup 1 needs 3k <= n, got k={k}, n={n}")));
    }
    let pool = pool(spec.threads)?;
    pool.install(|| {
        let groups: Vec<(usize, u64)> =
            spec.k_list.iter().flat_map(|&k| spec.seeds.iter().map(move |&s| (k, s))).collect();
        let hists = groups
            .par_iter()
            .map(|&(k, seed)| setup1_history(&ps, k, spec.hist_algo, &spec.radius, seed).map(Arc::new))
            .collect::<Result<Vec<_>>>()?;

        enum Cell {
            Solve(Budget, Algorithm),
            Baseline(HistAlgo),
        }
        let mut cells = Vec::new();
        for (g, _) in groups.iter().enumerate() {
            for &b in &spec.budget_list {
                for &a in &spec.algo_list {
                    cells.push((g, Cell::Solve(b, a)));
                }
            }
            cells.push((g, Cell::Baseline(HistAlgo::Carve)));
            cells.push((g, Cell::Baseline(HistAlgo::Fft)));
        }

        cells
            .par_iter()
            .map(|(g, cell)| {
                let (k, seed) = groups[*g];
                let hist = &hists[*g];
                let (rec, solution, budget) = match *cell {
                    Cell::Solve(b, algo) => {
                        let budget = b.resolve(n);
                        let inst = Instance::new(&ps, k, hist, budget)?;
                        let mut rec = record("setup1", spec, algo.name(), k, seed);
                        rec.b = Some(Budget::Absolute(budget));
                        let (rec, c) = solved_cell(&inst, spec, algo, seed, rec)?;
                        (rec, c, Some(budget))
                    }
                    Cell::Baseline(algo) => {
                        let rec = record("setup1", spec, algo.name(), k, seed);
                        let (rec, c) = baseline_cell(&ps, hist, spec, algo, k, seed, rec)?;
                        (rec, c, None)
                    }
                };
                Ok(CellOutcome { record: rec, hist: Arc::clone(hist), solution, budget })
            })
            .collect()
    })
}

/// Setup 1: new data arrives around an existing clustering.
pub fn setup1_new_data(ps: &PointSet, spec: &SweepSpec) -> Result<Vec<ExperimentRecord>> {
    Ok(setup1_outcomes(ps, spec)?.into_iter().map(|c| c.record).collect())
}

/// How historical centers move from one slice to the next.
#[derive(Debug, Clone)]
pub enum Carry {
    /// Disjoint slices: previous centers become external sites.
    External,
    /// Overlapping windows over one point set. A previous center that left the
    /// window is replaced by the lowest-index member of its cluster still in
    /// the window; a cluster with no such member is dropped.
    Windows { points: PointSet, windows: Vec<Range<usize>> },
}

impl Carry {
    fn slices(&self, given: &[PointSet]) -> Result<Vec<PointSet>> {
        match self {
            Carry::External => Ok(given.to_vec()),
            Carry::Windows { points, windows } => windows
                .iter()
                .map(|w| {
                    if w.start >= w.end || w.end > points.len() {
                        return Err(config(format!("window {w:?} out of range for {} points", points.len())));
                    }
                    Ok(points.select(&w.clone().collect::<Vec<_>>()))
                })
                .collect(),
        }
    }

    fn next_history(&self, i: usize, prev: &Clustering, cur: &PointSet) -> Result<Vec<Center>> {
        match self {
            Carry::External => Ok(prev.centers.iter().map(Center::as_external).collect()),
            Carry::Windows { windows, .. } => {
                let (was, now) = (&windows[i - 1], &windows[i]);
                let mut out: Vec<Center> = Vec::new();
                for (j, c) in prev.centers.iter().enumerate() {
                    let site = match c.origin {
                        CenterOrigin::External => Some(c.clone()),
                        CenterOrigin::DatasetIndex(local) => {
                            let g = was.start + local;
                            if now.contains(&g) {
                                Some(Center::from_point(cur, g - now.start))
                            } else {
                                (0..prev.labels.len())
                                    .filter(|&x| prev.labels[x] == j)
                                    .map(|x| was.start + x)
                                    .filter(|g| now.contains(g))
                                    .min()
                                    .map(|g| Center::from_point(cur, g - now.start))
                            }
                        }
                    };
                    if let Some(site) = site {
                        if !out.iter().any(|o| o.same_site(&site)) {
                            out.push(site);
                        }
                    }
                }
                if out.is_empty() {
                    return Err(config(format!("window {} shares no cluster with window {}", i + 1, i)));
                }
                Ok(out)
            }
        }
    }
}

/// Setup 2 with the stored solutions of every cell. Each (k, seed, algo,
/// budget) chain and the two baseline chains yield one outcome per slice.
pub fn setup2_outcomes(slices: &[PointSet], spec: &SweepSpec, carry: &Carry) -> Result<Vec<CellOutcome>> {
    spec.validate()?;
    let slices: Vec<PointSet> = carry.slices(slices)?.iter().map(with_cache).collect();
    if slices.is_empty() {
        return Err(config("no slices"));
    }
    if let Some(i) = slices.iter().position(PointSet::is_empty) {
        return Err(config(format!("slice {} is empty", i + 1)));
    }
    let pool = pool(spec.threads)?;
    pool.install(|| {
        let groups: Vec<(usize, u64)> =
            spec.k_list.iter().flat_map(|&k| spec.seeds.iter().map(move |&s| (k, s))).collect();
        let firsts = groups
            .par_iter()
            .map(|&(k, seed)| {
                let start = Instant::now();
                let (c, radius) = plain_k_center(&slices[0], k, spec.hist_algo, &spec.radius, seed)?;
                Ok((c, radius, start.elapsed().as_secs_f64()))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut chains: Vec<(usize, Option<(Algorithm, Budget)>, Option<HistAlgo>)> = Vec::new();
        for g in 0..groups.len() {
            for &a in &spec.algo_list {
                for &b in &spec.budget_list {
                    chains.push((g, Some((a, b)), None));
                }
            }
            chains.push((g, None, Some(HistAlgo::Carve)));
            chains.push((g, None, Some(HistAlgo::Fft)));
        }

        let per_chain = chains
            .par_iter()
            .map(|&(g, solver, baseline)| {
                let (k, seed) = groups[g];
                let name = match (solver, baseline) {
                    (Some((a, _)), _) => a.name(),
                    (None, Some(h)) => h.name(),
                    (None, None) => unreachable!(),
                };
                let tag = solver.map(|(_, b)| b);
                let (first, radius, secs) = &firsts[g];
                let mut rec = record("setup2", spec, name, k, seed);
                rec.b = tag;
                rec.slice = Some(1);
                rec.cost = *radius;
                rec.radius_used = *radius;
                rec.runtime = *secs;
                let mut out = vec![CellOutcome {
                    record: rec,
                    hist: Arc::new(first.clone()),
                    solution: first.clone(),
                    budget: tag.map(|b| b.resolve(slices[0].len())),
                }];
                let mut prev = first.clone();
                for i in 1..slices.len() {
                    let cur = &slices[i];
                    let hist = Arc::new(Clustering::nearest(cur, carry.next_history(i, &prev, cur)?)?);
                    let mut rec = record("setup2", spec, name, k, seed);
                    rec.b = tag;
                    rec.slice = Some(i + 1);
                    let (rec, solution, budget) = match (solver, baseline) {
                        (Some((algo, b)), _) => {
                            let budget = b.resolve(cur.len());
                            let inst = Instance::new(cur, k.max(hist.centers.len()), &hist, budget)?;
                            let (rec, c) = solved_cell(&inst, spec, algo, seed, rec)?;
                            (rec, c, Some(budget))
                        }
                        (None, Some(h)) => {
                            let (rec, c) = baseline_cell(cur, &hist, spec, h, k, seed, rec)?;
                            (rec, c, None)
                        }
                        (None, None) => unreachable!(),
                    };
                    prev = solution.clone();
                    out.push(CellOutcome { record: rec, hist, solution, budget });
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(per_chain.into_iter().flatten().collect())
    })
}

/// Setup 2: the data evolves slice by slice and each solution becomes the
/// next slice's history.
pub fn setup2_evolve(slices: &[PointSet], spec: &SweepSpec) -> Result<Vec<ExperimentRecord>> {
    Ok(setup2_outcomes(slices, spec, &Carry::External)?.into_iter().map(|c| c.record).collect())
}

#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub dataset: String,
    pub k_list: Vec<usize>,
    pub b_list: Vec<Budget>,
    pub n_prefix_list: Vec<usize>,
    pub algo_list: Vec<Algorithm>,
    pub seeds: Vec<u64>,
    pub hist_algo: HistAlgo,
    pub radius: RadiusSearchConfig,
}

/// Times the solvers on prefixes of `ps`. The history of each prefix is a
/// `hist_algo` clustering of that prefix. Cells run one at a time so timings
/// do not compete for cores. The `dataset` column reads `name:n=N`.
pub fn bench_scalability(ps: &PointSet, spec: &BenchSpec) -> Result<Vec<ExperimentRecord>> {
    let mut out = Vec::new();
    for &n in &spec.n_prefix_list {
        if n == 0 || n > ps.len() {
            return Err(config(format!("prefix {n} out of range for {} points", ps.len())));
        }
        let prefix = with_cache(&ps.prefix(n));
        for &k in &spec.k_list {
            for &seed in &spec.seeds {
                let (hist, _) = plain_k_center(&prefix, k, spec.hist_algo, &spec.radius, seed)?;
                for &b in &spec.b_list {
                    let budget = b.resolve(n);
                    let inst = Instance::new(&prefix, k, &hist, budget)?;
                    for &algo in &spec.algo_list {
                        let sol = timed_solve(&inst, algo, &spec.radius, seed, false)?;
                        log::info!("bench n={n} k={k} b={budget} seed={seed} {algo}: {:.4}s", sol.elapsed);
                        out.push(ExperimentRecord {
                            setup: "bench".into(),
                            dataset: format!("{}:n={n}", spec.dataset),
                            hist_algo: spec.hist_algo.name().into(),
                            algo: algo.name().into(),
                            k,
                            b: Some(Budget::Absolute(budget)),
                            slice: None,
                            cost: sol.cost,
                            updates: sol.reassignments,
                            runtime: sol.elapsed,
                            seed,
                            radius_used: sol.radius.get(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}
