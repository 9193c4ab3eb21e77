//! Test oracles: an exhaustive exact solver for tiny instances and the
//! idealized projection algorithm that knows an optimal solution.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::clustering::{assign, weights, Center, CenterOrigin, Clustering, Instance, Radius};
use crate::error::{Error, Result};
use crate::gap::{by_weight_desc, project, Projection};
use crate::solution::{Algorithm, Solution};
use crate::space::{euclidean, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_n: 12, max_k: 3 }
    }
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub optimal_radius: Radius,
    /// A feasible solution with cost at most `optimal_radius`.
    pub witness: Solution,
    /// Number of (radius, center subset) pairs examined.
    pub explored: usize,
}

/// Calls `f` on every size-`size` subset of `0..m` in lexicographic order;
/// stops early when `f` returns true.
fn for_each_subset(m: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if size > m {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + m - size) else { return false };
        idx[pos] += 1;
        for q in pos + 1..size {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Candidate center sites: distinct point coordinates in index order, then
/// historical centers that are not points.
fn candidate_sites(ps: &PointSet, hist: &[Center]) -> Vec<Center> {
    let mut sites: Vec<Center> = Vec::new();
    for i in 0..ps.len() {
        if !sites.iter().any(|c| c.coords.as_slice() == ps.point(i)) {
            sites.push(Center::from_point(ps, i));
        }
    }
    for h in hist {
        if !sites.iter().any(|c| c.same_site(h)) {
            sites.push(Center { coords: h.coords.clone(), origin: CenterOrigin::External });
        }
    }
    sites
}

fn radii(ps: &PointSet, sites: &[Center]) -> Vec<f64> {
    let mut r = vec![0.0];
    for i in 0..ps.len() {
        for c in sites {
            r.push(c.dist_from(ps, i));
        }
    }
    r.sort_unstable_by(f64::total_cmp);
    r.dedup();
    r
}

/// Exact label-consistent k-center by exhaustion.
///
/// Radii are scanned in ascending order and, per radius, every center subset
/// of size at most `k`. A point keeps its historical label iff its historical
/// center is open and within `r`; otherwise it needs an open center within
/// `r` and costs one reassignment. The first feasible (radius, subset) wins.
pub fn brute_force_lckc(inst: &Instance<'_>, limits: OracleLimits) -> Result<OracleResult> {
    let (n, k) = (inst.n(), inst.k);
    if n > limits.max_n || k > limits.max_k {
        return Err(Error::LimitExceeded { n, k, max_n: limits.max_n, max_k: limits.max_k });
    }
    let ps = inst.points;
    let sites = candidate_sites(ps, &inst.hist.centers);
    let hist_site: Vec<usize> =
        inst.hist.centers.iter().map(|h| sites.iter().position(|c| c.same_site(h)).expect("history is a site")).collect();
    let dist: Vec<Vec<f64>> = (0..n).map(|x| sites.iter().map(|c| c.dist_from(ps, x)).collect()).collect();

    let mut explored = 0usize;
    for r in radii(ps, &sites) {
        let mut hit: Option<Vec<usize>> = None;
        for size in 1..=k.min(sites.len()) {
            let found = for_each_subset(sites.len(), size, &mut |subset| {
                explored += 1;
                let mut forced = 0;
                for x in 0..n {
                    let h = hist_site[inst.hist.labels[x]];
                    if subset.contains(&h) && dist[x][h] <= r {
                        continue;
                    }
                    if !subset.iter().any(|&c| dist[x][c] <= r) {
                        return false;
                    }
                    forced += 1;
                    if forced > inst.budget {
                        return false;
                    }
                }
                hit = Some(subset.to_vec());
                true
            });
            if found {
                break;
            }
        }
        if let Some(subset) = hit {
            let radius = Radius::of(r);
            let centers: Vec<Center> = subset.iter().map(|&c| sites[c].clone()).collect();
            let witness = Solution::evaluate(inst, assign(inst, centers, radius), radius, Algorithm::Oracle);
            debug_assert!(witness.feasible && witness.cost <= r);
            return Ok(OracleResult { optimal_radius: radius, witness, explored });
        }
    }
    Err(Error::Infeasible { forced: inst.forced_reassignments(Radius::of(f64::INFINITY)), budget: inst.budget })
}

/// Exact (unconstrained) k-center optimum by exhaustion over center subsets
/// drawn from the points.
pub fn brute_force_k_center(ps: &PointSet, k: usize, limits: OracleLimits) -> Result<Radius> {
    let hist = Clustering { centers: vec![Center::from_point(ps, 0)], labels: vec![0; ps.len()] };
    let inst = Instance::new(ps, k.max(1), &hist, ps.len())?;
    Ok(brute_force_lckc(&inst, limits)?.optimal_radius)
}

/// Intermediate sets of the idealized projection, as historical center
/// indices unless noted.
#[derive(Debug, Clone)]
pub struct IdealizedOutcome {
    pub solution: Solution,
    /// Historical centers that are also optimal centers.
    pub preserved: Vec<usize>,
    /// Preserved centers within `r` of no CARVE center.
    pub far: Vec<usize>,
    /// Projected CARVE centers (sites).
    pub projected: Vec<Center>,
    /// Extra preserved-neighborhood picks per covering CARVE center.
    pub covered_extra: Vec<usize>,
    /// Heaviest remaining historical centers standing in for the far ones.
    pub far_extra: Vec<usize>,
}

/// The idealized algorithm used to analyze GreedyAndProject.
///
/// Given an optimal solution `opt` and the CARVE output `s` for radius `r`,
/// it projects `s` like GreedyAndProject, then for every CARVE center adds
/// the heaviest preserved historical neighbors except one, and finally one
/// heavy historical center per far preserved center.
pub fn idealized_project_parts(inst: &Instance<'_>, opt: &Solution, s: &[Center], r: Radius) -> Result<IdealizedOutcome> {
    for (i, a) in s.iter().enumerate() {
        for b in &s[i + 1..] {
            if euclidean(&a.coords, &b.coords) <= 2.0 * r.get() {
                return Err(Error::invalid(format!("CARVE centers must be more than 2r = {} apart", 2.0 * r.get())));
            }
        }
    }
    let m = inst.hist.centers.len();
    let w = weights(inst, r);
    let preserved: Vec<usize> = (0..m).filter(|&h| opt.clustering.position_of(&inst.hist.centers[h]).is_some()).collect();

    let mut used = vec![false; m];
    let mut covered = vec![false; m];
    let mut projected = Vec::with_capacity(s.len());
    let mut covered_extra = Vec::new();
    for (c, p) in s.iter().zip(project(inst, s, &w, r)) {
        let hat = match p {
            Projection::Historical(h) => {
                used[h] = true;
                projected.push(inst.hist.centers[h].clone());
                Some(h)
            }
            Projection::Kept => {
                projected.push(c.clone());
                None
            }
        };
        let gamma: Vec<usize> = crate::clustering::center_neighbors(inst, c, r)
            .into_iter()
            .filter(|h| preserved.contains(h))
            .collect();
        if gamma.is_empty() {
            continue;
        }
        for &h in &gamma {
            covered[h] = true;
        }
        let pool: Vec<usize> = gamma.iter().copied().filter(|&h| Some(h) != hat).collect();
        for h in by_weight_desc(pool, &w).into_iter().take(gamma.len() - 1) {
            used[h] = true;
            covered_extra.push(h);
        }
    }
    let far: Vec<usize> = preserved.iter().copied().filter(|&h| !covered[h]).collect();
    let rest: Vec<usize> = (0..m).filter(|&h| !used[h]).collect();
    let far_extra: Vec<usize> = by_weight_desc(rest, &w).into_iter().take(far.len()).collect();

    let mut centers = projected.clone();
    centers.extend(covered_extra.iter().chain(&far_extra).map(|&h| inst.hist.centers[h].clone()));
    let solution = Solution::evaluate(inst, assign(inst, centers, r), r, Algorithm::Idealized);
    Ok(IdealizedOutcome { solution, preserved, far, projected, covered_extra, far_extra })
}

/// [`idealized_project_parts`] without the intermediate sets.
pub fn idealized_project(inst: &Instance<'_>, opt: &Solution, s: &[Center], r: Radius) -> Result<Solution> {
    idealized_project_parts(inst, opt, s, r).map(|o| o.solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carve::carve_all;

    fn line_instance(xs: &[f64], centers: &[usize], labels: &[usize]) -> (PointSet, Clustering) {
        let ps = PointSet::from_line(xs).unwrap();
        let hist = Clustering::new(centers.iter().map(|&i| Center::from_point(&ps, i)).collect(), labels.to_vec()).unwrap();
        (ps, hist)
    }

    #[test]
    fn subsets_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, &mut |s| {
            seen.push((s[0], s[1]));
            false
        });
        assert_eq!(seen, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let mut count = 0;
        for_each_subset(3, 4, &mut |_| {
            count += 1;
            false
        });
        assert_eq!(count, 0);
    }

    #[test]
    fn zero_budget_line_example() {
        // X = {0, 1, 4, 5}, H = {0, 4}, each serving its two nearest points.
        // With b = 0, {0, 4} must stay open and every point keeps its label: r = 1.
        let (ps, hist) = line_instance(&[0.0, 1.0, 4.0, 5.0], &[0, 2], &[0, 0, 1, 1]);
        let inst = Instance::new(&ps, 2, &hist, 0).unwrap();
        let res = brute_force_lckc(&inst, OracleLimits::default()).unwrap();
        assert_eq!(res.optimal_radius, Radius::of(1.0));
        assert!(res.witness.feasible);
        assert_eq!(res.witness.reassignments, 0);
        // {0, 4} is found only after every size-1 subset and earlier pairs
        assert!(res.explored > 4);
    }

    #[test]
    fn full_budget_is_plain_k_center() {
        let (ps, hist) = line_instance(&[0.0, 1.0, 4.0, 5.0, 9.0], &[0, 4], &[0, 0, 0, 1, 1]);
        let inst = Instance::new(&ps, 2, &hist, 5).unwrap();
        let res = brute_force_lckc(&inst, OracleLimits::default()).unwrap();
        // every split leaves a cluster containing two points 4 apart with no
        // point between them closer to both, e.g. {0, 1} | {4, 5, 9} around 5
        assert_eq!(res.optimal_radius, Radius::of(4.0));
        assert_eq!(res.optimal_radius, brute_force_k_center(&ps, 2, OracleLimits::default()).unwrap());
    }

    #[test]
    fn optimal_history_with_zero_budget() {
        let (ps, hist) = line_instance(&[0.0, 1.0, 2.0, 10.0, 11.0], &[1, 4], &[0, 0, 0, 1, 1]);
        let inst = Instance::new(&ps, 2, &hist, 0).unwrap();
        let res = brute_force_lckc(&inst, OracleLimits::default()).unwrap();
        assert_eq!(res.optimal_radius, Radius::of(1.0));
    }

    #[test]
    fn limits_are_enforced() {
        let xs: Vec<f64> = (0..13).map(|i| i as f64).collect();
        let labels = vec![0; 13];
        let (ps, hist) = line_instance(&xs, &[0], &labels);
        let inst = Instance::new(&ps, 1, &hist, 0).unwrap();
        assert!(matches!(brute_force_lckc(&inst, OracleLimits::default()), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn idealized_without_preserved_history() {
        // history sits far from everything optimal; opt keeps none of it
        let (ps, hist) = line_instance(&[0.0, 0.5, 20.0, 20.5, 40.0], &[4], &[0, 0, 0, 0, 0]);
        let inst = Instance::new(&ps, 3, &hist, 5).unwrap();
        let opt = brute_force_lckc(&inst, OracleLimits::default()).unwrap();
        let r = opt.optimal_radius;
        let s = carve_all(&ps, r.doubled(), 0);
        let out = idealized_project_parts(&inst, &opt.witness, &s, r).unwrap();
        if out.preserved.is_empty() {
            assert!(out.covered_extra.is_empty());
            assert!(out.far_extra.is_empty());
        }
        assert!(out.solution.feasible);
        assert_eq!(out.projected.len(), s.len());
    }

    #[test]
    fn idealized_with_distinctly_covered_history() {
        let (ps, hist) = line_instance(&[0.0, 1.0, 10.0, 11.0], &[0, 2], &[0, 0, 1, 1]);
        let inst = Instance::new(&ps, 2, &hist, 0).unwrap();
        let opt = brute_force_lckc(&inst, OracleLimits::default()).unwrap();
        let r = opt.optimal_radius;
        let s = carve_all(&ps, r.doubled(), 0);
        let out = idealized_project_parts(&inst, &opt.witness, &s, r).unwrap();
        assert_eq!(out.preserved, vec![0, 1]);
        assert!(out.covered_extra.is_empty());
        assert!(out.far.is_empty());
        assert!(out.solution.feasible);
    }

    #[test]
    fn idealized_rejects_close_carve_centers() {
        let (ps, hist) = line_instance(&[0.0, 1.0], &[0], &[0, 0]);
        let inst = Instance::new(&ps, 2, &hist, 2).unwrap();
        let opt = brute_force_lckc(&inst, OracleLimits::default()).unwrap();
        let s = vec![Center::from_point(&ps, 0), Center::from_point(&ps, 1)];
        assert!(idealized_project(&inst, &opt.witness, &s, Radius::of(1.0)).is_err());
    }
}
