//! OverCover: guess which historical centers survive, carve whatever they do
//! not cover, and merge.
//!
//! [`overcover_exact`] tries every subset of historical centers and is a
//! 2-approximation in time `2^|H| poly(n)`. [`overcover_greedy`] keeps a
//! single guess built by dropping the lightest historical centers while the
//! budget allows; it has no guarantee but runs in polynomial time.

use alloc::format;
use alloc::vec::Vec;

use crate::carve::carve_indices;
use crate::clustering::{assign, weights, Center, Instance, Radius};
use crate::error::{Error, Result};
use crate::solution::{Algorithm, Solution};

/// Largest historical center count accepted by the exact variant.
pub const MAX_EXACT_HISTORY: usize = 24;

/// One OverCover iteration for a fixed guess `kept` of preserved historical
/// centers (ascending indices). `None` if CARVE exceeds `limit` centers.
pub(crate) fn overcover_centers(
    inst: &Instance<'_>,
    kept: &[usize],
    r: Radius,
    seed: u64,
    limit: Option<usize>,
) -> Option<Vec<Center>> {
    let ps = inst.points;
    let hs: Vec<&Center> = kept.iter().map(|&h| &inst.hist.centers[h]).collect();
    let uncovered: Vec<usize> =
        (0..ps.len()).filter(|&x| hs.iter().all(|h| h.dist_from(ps, x) > r.get())).collect();
    let room = limit.map(|l| l.saturating_sub(kept.len()));
    let carved = carve_indices(ps, &uncovered, r.doubled(), seed, room)?;
    let mut centers: Vec<Center> = hs.into_iter().cloned().collect();
    centers.extend(carved.into_iter().map(|i| Center::from_point(ps, i)));
    Some(centers)
}

/// Whether candidate `a` (cost, kept set) beats the incumbent `b`: lower cost,
/// then more preserved centers, then the lexicographically smaller set.
fn better(a: (f64, &[usize]), b: (f64, &[usize])) -> bool {
    if a.0 != b.0 {
        return a.0 < b.0;
    }
    if a.1.len() != b.1.len() {
        return a.1.len() > b.1.len();
    }
    a.1 < b.1
}

/// Exact OverCover at radius guess `r`, with an optional cap on CARVE so
/// hopeless subsets are abandoned early.
pub(crate) fn overcover_exact_capped(inst: &Instance<'_>, r: Radius, seed: u64, cap: bool) -> Result<Option<Solution>> {
    let m = inst.hist.centers.len();
    if m > MAX_EXACT_HISTORY {
        return Err(Error::invalid(format!(
            "exact OverCover enumerates 2^|H| subsets; |H| = {m} exceeds {MAX_EXACT_HISTORY}"
        )));
    }
    let limit = cap.then_some(inst.k);
    let mut best: Option<(Solution, Vec<usize>)> = None;
    for mask in 0u32..(1u32 << m) {
        let kept: Vec<usize> = (0..m).filter(|&h| mask & (1 << h) != 0).collect();
        let Some(centers) = overcover_centers(inst, &kept, r, seed, limit) else { continue };
        if centers.len() > inst.k {
            continue;
        }
        let sol = Solution::evaluate(inst, assign(inst, centers, r), r, Algorithm::OverCoverExact);
        if !sol.feasible {
            continue;
        }
        if best.as_ref().map_or(true, |(b, bk)| better((sol.cost, &kept), (b.cost, bk))) {
            best = Some((sol, kept));
        }
    }
    Ok(best.map(|(s, _)| s))
}

/// Exact OverCover at radius guess `r`.
///
/// Returns the cheapest admissible candidate, or, when no subset is
/// admissible, the candidate that keeps every historical center marked
/// infeasible. Fails only when `|H|` exceeds [`MAX_EXACT_HISTORY`].
pub fn overcover_exact(inst: &Instance<'_>, r: Radius, seed: u64) -> Result<Solution> {
    if let Some(sol) = overcover_exact_capped(inst, r, seed, false)? {
        return Ok(sol);
    }
    let all: Vec<usize> = (0..inst.hist.centers.len()).collect();
    let centers = overcover_centers(inst, &all, r, seed, None).expect("unbounded carve always succeeds");
    let mut sol = Solution::evaluate(inst, assign(inst, centers, r), r, Algorithm::OverCoverExact);
    sol.feasible = false;
    Ok(sol)
}

/// Greedy guess of the preserved historical centers: drop centers in
/// ascending weight order (ties to the lowest index) while the total dropped
/// weight stays within the budget. Returns the kept indices, ascending.
pub fn greedy_kept(inst: &Instance<'_>, r: Radius) -> Vec<usize> {
    let w = weights(inst, r);
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by(|&a, &b| w[a].cmp(&w[b]).then(a.cmp(&b)));
    let mut dropped = alloc::vec![false; w.len()];
    let mut spent = 0usize;
    for h in order {
        if spent + w[h] > inst.budget {
            break;
        }
        spent += w[h];
        dropped[h] = true;
    }
    (0..w.len()).filter(|&h| !dropped[h]).collect()
}

pub(crate) fn overcover_greedy_centers(inst: &Instance<'_>, r: Radius, seed: u64, limit: Option<usize>) -> Option<Vec<Center>> {
    overcover_centers(inst, &greedy_kept(inst, r), r, seed, limit)
}

/// Greedy OverCover at radius guess `r`. With `budget = n` every historical
/// center is dropped and the centers are exactly `CARVE(X, 2r)`.
pub fn overcover_greedy(inst: &Instance<'_>, r: Radius, seed: u64) -> Solution {
    let centers = overcover_greedy_centers(inst, r, seed, None).expect("unbounded carve always succeeds");
    Solution::evaluate(inst, assign(inst, centers, r), r, Algorithm::OverCoverGreedy)
}
