//! Randomized small instances checked against the brute-force oracle.

use std::fmt;

use lckc_core::carve::carve_all;
use lckc_core::oracle::{brute_force_lckc, idealized_project, OracleLimits};
use lckc_core::{greedy_and_project, solve, weights, Algorithm, Center, Clustering, Instance, PointSet, Radius, RadiusSearchConfig};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;

/// Slack on every ratio comparison.
pub const TOLERANCE: f64 = 1e-9;

/// How historical labels are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMode {
    /// Each point labeled by its nearest historical center.
    Nearest,
    /// Labels drawn uniformly at random.
    Arbitrary,
}

#[derive(Debug, Clone)]
pub struct Case {
    pub seed: u64,
    pub points: PointSet,
    pub hist: Clustering,
    pub k: usize,
    pub labels: LabelMode,
}

/// Points uniform in the unit square, `2 <= n <= max_n`, `1 <= k <= max_k`,
/// `k` historical centers drawn from the points.
pub fn random_case(seed: u64, max_n: usize, max_k: usize, labels: LabelMode) -> Case {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=max_n.max(2));
    let k = rng.random_range(1..=max_k.clamp(1, n));
    let coords = (0..2 * n).map(|_| rng.random::<f64>()).collect();
    let points = PointSet::new(2, coords).expect("finite coordinates");
    let centers: Vec<Center> = sample(&mut rng, n, k).into_iter().map(|i| Center::from_point(&points, i)).collect();
    let hist = match labels {
        LabelMode::Nearest => Clustering::nearest(&points, centers),
        LabelMode::Arbitrary => {
            let l = (0..n).map(|_| rng.random_range(0..k)).collect();
            Clustering::new(centers, l)
        }
    }
    .expect("valid history");
    Case { seed, points, hist, k, labels }
}

/// The three budgets checked per case: `0`, `ceil(n/4)` and `n`.
pub fn budgets(n: usize) -> [usize; 3] {
    [0, n.div_ceil(4), n]
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub seed: u64,
    pub b: usize,
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "seed {} b {}: {}: {}", self.seed, self.b, self.check, self.detail)
    }
}

/// Measurements for one (case, budget) pair.
#[derive(Debug, Clone)]
pub struct Measured {
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub b: usize,
    pub optimum: f64,
    pub gap_cost: f64,
    pub overcover_cost: f64,
    /// Relabelings of GreedyAndProject and of the idealized algorithm at the
    /// optimal radius.
    pub gap_moves: usize,
    pub ideal_moves: usize,
    /// `n` minus the kept historical weight, for both.
    pub gap_weight_bound: usize,
    pub ideal_weight_bound: usize,
    pub violations: Vec<Violation>,
}

fn weight_bound(inst: &Instance<'_>, c: &Clustering, r: Radius) -> usize {
    let w = weights(inst, r);
    let kept: usize =
        inst.hist.centers.iter().zip(&w).filter(|(h, _)| c.position_of(h).is_some()).map(|(_, w)| w).sum();
    inst.n() - kept
}

/// Runs every check on one case at one budget.
pub fn check(case: &Case, b: usize, cfg: &RadiusSearchConfig) -> Result<Measured> {
    let inst = Instance::new(&case.points, case.k, &case.hist, b)?;
    let opt = brute_force_lckc(&inst, OracleLimits::default())?;
    let r = opt.optimal_radius;
    let gap = solve(&inst, Algorithm::Gap, cfg, 0, false)?;
    let oc = solve(&inst, Algorithm::OverCoverExact, cfg, 0, false)?;
    let alg1 = greedy_and_project(&inst, r, 0);
    let alg2 = idealized_project(&inst, &opt.witness, &carve_all(&case.points, r.doubled(), 0), r)?;

    let mut m = Measured {
        seed: case.seed,
        n: inst.n(),
        k: case.k,
        b,
        optimum: r.get(),
        gap_cost: gap.cost,
        overcover_cost: oc.cost,
        gap_moves: alg1.reassignments,
        ideal_moves: alg2.reassignments,
        gap_weight_bound: weight_bound(&inst, &alg1.clustering, r),
        ideal_weight_bound: weight_bound(&inst, &alg2.clustering, r),
        violations: Vec::new(),
    };
    let mut fail = |check: &'static str, detail: String| m.violations.push(Violation { seed: case.seed, b, check, detail });

    let opt = r.get();
    if !gap.feasible || gap.cost > 3.0 * opt + TOLERANCE {
        fail("gap ratio", format!("feasible {} cost {} vs optimum {opt}", gap.feasible, gap.cost));
    }
    if !oc.feasible || oc.cost > 2.0 * opt + TOLERANCE {
        fail("overcover ratio", format!("feasible {} cost {} vs optimum {opt}", oc.feasible, oc.cost));
    }
    if !alg2.feasible || alg2.num_centers() > case.k {
        fail("idealized feasible", format!("{} centers, {} moves", alg2.num_centers(), alg2.reassignments));
    }
    if alg2.reassignments > b {
        fail("idealized budget", format!("{} moves > {b}", alg2.reassignments));
    }
    if m.gap_weight_bound > m.ideal_weight_bound {
        fail("weight bound", format!("{} > {}", m.gap_weight_bound, m.ideal_weight_bound));
    }
    if case.labels == LabelMode::Nearest && alg1.reassignments > alg2.reassignments {
        fail("relabel count", format!("{} > {}", alg1.reassignments, alg2.reassignments));
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub instances: usize,
    pub max_n: usize,
    pub max_k: usize,
    pub seed: u64,
    pub labels: LabelMode,
}

/// Checks `instances` cases with seeds `seed, seed + 1, ...` at every budget
/// from [`budgets`].
pub fn run(cfg: &CheckConfig) -> Result<Vec<Measured>> {
    let search = RadiusSearchConfig::default();
    let mut out = Vec::with_capacity(3 * cfg.instances);
    for i in 0..cfg.instances as u64 {
        let case = random_case(cfg.seed.wrapping_add(i), cfg.max_n, cfg.max_k, cfg.labels);
        for b in budgets(case.points.len()) {
            out.push(check(&case, b, &search)?);
        }
    }
    Ok(out)
}
