//! Radius guessing.
//!
//! The solvers need a guess of the optimal radius. [`solve`] builds a sorted
//! grid of candidate radii and looks for the smallest one at which the chosen
//! solver reports a feasible solution.
//!
//! For GreedyAndProject and exact OverCover every radius at or above the
//! optimum is feasible, so binary search lands at or below the optimum. The
//! greedy OverCover variant has no such property; with `fallback` on, the
//! boundary found by binary search is probed at distances 1, 2, 4, ... below
//! and, whenever a feasible radius turns up there, binary search runs again
//! underneath it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::carve::carve_indices;
use crate::clustering::{assign, Center, Instance, Radius};
use crate::error::{Error, Result};
use crate::gap::gap_centers;
use crate::overcover::{overcover_exact_capped, overcover_greedy_centers};
use crate::refine::refine;
use crate::space::{euclidean, PointSet};

pub use crate::solution::Algorithm;
use crate::solution::Solution;

/// How candidate radii are generated and scanned.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusMode {
    /// Every distinct pairwise distance (and 0), binary search.
    ExactBinary,
    /// Every distinct pairwise distance (and 0), scanned upward.
    ExactLinear,
    /// `0` and `d_min (1 + eps)^i` up to `d_max`, binary search.
    Geometric { eps: f64 },
}

impl FromStr for RadiusMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(RadiusMode::ExactBinary),
            "exact-linear" => Ok(RadiusMode::ExactLinear),
            _ => {
                let eps = s
                    .strip_prefix("geom:")
                    .and_then(|e| e.parse::<f64>().ok())
                    .ok_or_else(|| Error::invalid(format!("radius mode `{s}`: expected exact, exact-linear or geom:EPS")))?;
                if !(eps > 0.0 && eps.is_finite()) {
                    return Err(Error::invalid(format!("geometric grid needs eps > 0, got {eps}")));
                }
                Ok(RadiusMode::Geometric { eps })
            }
        }
    }
}

impl core::fmt::Display for RadiusMode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RadiusMode::ExactBinary => f.write_str("exact"),
            RadiusMode::ExactLinear => f.write_str("exact-linear"),
            RadiusMode::Geometric { eps } => write!(f, "geom:{eps}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusSearchConfig {
    pub mode: RadiusMode,
    /// Probe below the binary-search boundary at distances 1, 2, 4, ... and
    /// search again underneath any feasible radius found there.
    pub fallback: bool,
}

impl Default for RadiusSearchConfig {
    fn default() -> Self {
        RadiusSearchConfig { mode: RadiusMode::ExactBinary, fallback: true }
    }
}

impl RadiusSearchConfig {
    pub fn new(mode: RadiusMode) -> Self {
        RadiusSearchConfig { mode, ..Default::default() }
    }
}

/// Sorted candidate radii for `ps`.
///
/// Distances between points and `sites` (e.g. historical centers that are not
/// dataset points) are included alongside the pairwise point distances.
/// Always contains 0. The exact grid holds `O(n^2)` values.
pub fn radius_grid(ps: &PointSet, sites: &[Center], mode: RadiusMode) -> Vec<f64> {
    let n = ps.len();
    let external: Vec<&Center> =
        sites.iter().filter(|c| matches!(c.origin, crate::clustering::CenterOrigin::External)).collect();
    let for_each = |f: &mut dyn FnMut(f64)| {
        for i in 0..n {
            for j in i + 1..n {
                f(ps.dist(i, j));
            }
            for c in &external {
                f(euclidean(ps.point(i), &c.coords));
            }
        }
    };
    match mode {
        RadiusMode::ExactBinary | RadiusMode::ExactLinear => {
            let mut grid = Vec::with_capacity(n * n.saturating_sub(1) / 2 + n * external.len() + 1);
            grid.push(0.0);
            for_each(&mut |d| grid.push(d));
            grid.sort_unstable_by(f64::total_cmp);
            grid.dedup();
            grid
        }
        RadiusMode::Geometric { eps } => {
            let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
            for_each(&mut |d| {
                if d > 0.0 && d < lo {
                    lo = d;
                }
                hi = hi.max(d);
            });
            let mut grid = alloc::vec![0.0];
            if hi > 0.0 {
                let mut r = lo;
                while r < hi {
                    grid.push(r);
                    r *= 1.0 + eps;
                }
                grid.push(hi);
            }
            grid
        }
    }
}

/// Runs `algo` at radius `r`; `Some` only if the result is feasible.
fn probe(inst: &Instance<'_>, algo: Algorithm, r: Radius, seed: u64) -> Result<Option<Solution>> {
    let limit = Some(inst.k);
    let centers = match algo {
        Algorithm::Gap => gap_centers(inst, r, seed, limit),
        Algorithm::OverCoverGreedy => overcover_greedy_centers(inst, r, seed, limit),
        Algorithm::OverCoverExact => return overcover_exact_capped(inst, r, seed, true),
        other => return Err(Error::invalid(format!("`{other}` is not a label-consistent solver"))),
    };
    let Some(centers) = centers else { return Ok(None) };
    if centers.len() > inst.k {
        return Ok(None);
    }
    let sol = Solution::evaluate(inst, assign(inst, centers, r), r, algo);
    Ok(sol.feasible.then_some(sol))
}

/// Memoized feasibility probes over a grid.
struct Prober<'i, 'a> {
    inst: &'i Instance<'a>,
    algo: Algorithm,
    seed: u64,
    grid: &'i [f64],
    seen: BTreeMap<usize, Option<Solution>>,
}

impl Prober<'_, '_> {
    fn feasible(&mut self, i: usize) -> Result<bool> {
        if let Some(s) = self.seen.get(&i) {
            return Ok(s.is_some());
        }
        let s = probe(self.inst, self.algo, Radius::of(self.grid[i]), self.seed)?;
        let ok = s.is_some();
        self.seen.insert(i, s);
        Ok(ok)
    }

    fn take(&mut self, i: usize) -> Solution {
        self.seen.remove(&i).flatten().expect("index was probed feasible")
    }
}

/// Smallest feasible grid index by binary search; `top` must be feasible.
fn binary_boundary(p: &mut Prober<'_, '_>, top: usize) -> Result<usize> {
    let (mut lo, mut hi) = (0, top);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if p.feasible(mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(hi)
}

/// First feasible index among `i - 1, i - 2, i - 4, ...`.
fn below(p: &mut Prober<'_, '_>, i: usize) -> Result<Option<usize>> {
    let mut step = 1;
    while step <= i {
        if p.feasible(i - step)? {
            return Ok(Some(i - step));
        }
        step *= 2;
    }
    Ok(None)
}

/// Solves `inst` with `algo`, searching the radius grid described by `cfg`.
///
/// Errors with [`Error::Infeasible`] if even the largest grid radius gives no
/// feasible solution.
pub fn solve(inst: &Instance<'_>, algo: Algorithm, cfg: &RadiusSearchConfig, seed: u64, refine_after: bool) -> Result<Solution> {
    let grid = radius_grid(inst.points, &inst.hist.centers, cfg.mode);
    let top = grid.len() - 1;
    let mut p = Prober { inst, algo, seed, grid: &grid, seen: BTreeMap::new() };

    let found = if cfg.mode == RadiusMode::ExactLinear {
        let mut hit = None;
        for i in 0..=top {
            if p.feasible(i)? {
                hit = Some(i);
                break;
            }
        }
        hit
    } else if p.feasible(top)? {
        let mut i = binary_boundary(&mut p, top)?;
        while cfg.fallback {
            match below(&mut p, i)? {
                Some(j) => i = binary_boundary(&mut p, j)?,
                None => break,
            }
        }
        Some(i)
    } else {
        None
    };

    let Some(i) = found else {
        return Err(Error::Infeasible { forced: inst.forced_reassignments(Radius::of(grid[top])), budget: inst.budget });
    };
    let sol = p.take(i);
    if refine_after {
        refine(inst, &sol)
    } else {
        Ok(sol)
    }
}

/// Hochbaum–Shmoys k-center: CARVE at the smallest grid radius `r` for which
/// `CARVE(X, 2r)` opens at most `k` centers.
pub fn carve_k_center(ps: &PointSet, k: usize, mode: RadiusMode, seed: u64) -> Result<(Vec<Center>, Radius)> {
    if k == 0 || ps.is_empty() {
        return Err(Error::invalid("k-center needs k >= 1 and a non-empty point set"));
    }
    let grid = radius_grid(ps, &[], mode);
    let all: Vec<usize> = (0..ps.len()).collect();
    let fits = |i: usize| carve_indices(ps, &all, Radius::of(grid[i]).doubled(), seed, Some(k));
    let (mut lo, mut hi) = (0, grid.len() - 1);
    if mode == RadiusMode::ExactLinear {
        hi = (0..grid.len()).find(|&i| fits(i).is_some()).unwrap_or(hi);
    } else {
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if fits(mid).is_some() {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
    }
    let centers = fits(hi).expect("the largest grid radius carves a single center");
    Ok((centers.into_iter().map(|i| Center::from_point(ps, i)).collect(), Radius::of(grid[hi])))
}
