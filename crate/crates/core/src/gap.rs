//! GreedyAndProject: the polynomial-time 3-approximation.
//!
//! On a radius guess `r`:
//! 1. greedy phase: `S = CARVE(X, 2r)`;
//! 2. project phase: every `s` in `S` is swapped for the heaviest historical
//!    center within `r` of it, if there is one;
//! 3. end phase: the heaviest remaining historical centers fill the center
//!    set up to `k`, then points are labeled with [`assign`].
//!
//! When `r` is at least the optimal radius the result opens at most `k`
//! centers, costs at most `3r` and reassigns at most `b` points.

use alloc::vec::Vec;

use crate::carve::carve_indices;
use crate::clustering::{assign, center_neighbors, weights, Center, Instance, Radius};
use crate::solution::{Algorithm, Solution};

/// Index of the heaviest center among `candidates`, ties to the lowest index.
pub(crate) fn heaviest(candidates: &[usize], w: &[usize]) -> Option<usize> {
    candidates.iter().copied().fold(None, |best, h| match best {
        Some(b) if w[b] > w[h] || (w[b] == w[h] && b < h) => Some(b),
        _ => Some(h),
    })
}

/// Historical center indices ordered by weight descending, ties by index.
pub(crate) fn by_weight_desc(mut hs: Vec<usize>, w: &[usize]) -> Vec<usize> {
    hs.sort_by(|&a, &b| w[b].cmp(&w[a]).then(a.cmp(&b)));
    hs
}

/// Outcome of the project phase for one CARVE center.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Projection {
    /// Swapped for historical center `h`.
    Historical(usize),
    /// No historical center within `r`; the CARVE point stays.
    Kept,
}

/// Projects each CARVE center onto its heaviest historical neighbor.
pub(crate) fn project(inst: &Instance<'_>, s: &[Center], w: &[usize], r: Radius) -> Vec<Projection> {
    s.iter()
        .map(|c| match heaviest(&center_neighbors(inst, c, r), w) {
            Some(h) => Projection::Historical(h),
            None => Projection::Kept,
        })
        .collect()
}

/// Center set of GreedyAndProject, or `None` when CARVE alone already needs
/// more than `limit` centers.
pub(crate) fn gap_centers(inst: &Instance<'_>, r: Radius, seed: u64, limit: Option<usize>) -> Option<Vec<Center>> {
    let all: Vec<usize> = (0..inst.n()).collect();
    let s: Vec<Center> = carve_indices(inst.points, &all, r.doubled(), seed, limit)?
        .into_iter()
        .map(|i| Center::from_point(inst.points, i))
        .collect();
    let w = weights(inst, r);

    let mut taken = alloc::vec![false; inst.hist.centers.len()];
    let mut centers = Vec::with_capacity(inst.k.max(s.len()));
    for (c, p) in s.iter().zip(project(inst, &s, &w, r)) {
        match p {
            Projection::Historical(h) => {
                taken[h] = true;
                centers.push(inst.hist.centers[h].clone());
            }
            Projection::Kept => centers.push(c.clone()),
        }
    }

    let rest: Vec<usize> = (0..inst.hist.centers.len()).filter(|&h| !taken[h]).collect();
    let room = inst.k.saturating_sub(centers.len());
    centers.extend(by_weight_desc(rest, &w).into_iter().take(room).map(|h| inst.hist.centers[h].clone()));
    Some(centers)
}

/// Runs GreedyAndProject at radius guess `r`. Infeasibility (too many
/// centers or too many reassignments) is reported on the solution.
pub fn greedy_and_project(inst: &Instance<'_>, r: Radius, seed: u64) -> Solution {
    let centers = gap_centers(inst, r, seed, None).expect("unbounded carve always succeeds");
    Solution::evaluate(inst, assign(inst, centers, r), r, Algorithm::Gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustering::Clustering;
    use crate::space::PointSet;
    use alloc::vec;

    #[test]
    fn single_point_instance() {
        let ps = PointSet::from_line(&[2.5]).unwrap();
        let hist = Clustering::new(vec![Center::from_point(&ps, 0)], vec![0]).unwrap();
        let inst = Instance::new(&ps, 1, &hist, 0).unwrap();
        for r in [0.0, 1.0, 10.0] {
            let sol = greedy_and_project(&inst, Radius::of(r), 0);
            assert!(sol.feasible);
            assert_eq!(sol.reassignments, 0);
            assert_eq!(sol.cost, 0.0);
            assert_eq!(sol.clustering.centers, hist.centers);
        }
    }

    #[test]
    fn tie_helpers() {
        let w = [3, 5, 5, 1];
        assert_eq!(heaviest(&[0, 1, 2, 3], &w), Some(1));
        assert_eq!(heaviest(&[3, 2, 0], &w), Some(2));
        assert_eq!(heaviest(&[], &w), None);
        assert_eq!(by_weight_desc(vec![3, 2, 1, 0], &w), vec![1, 2, 0, 3]);
    }

    #[test]
    fn projects_onto_heaviest_neighbor_and_fills_up() {
        // H = {0, 1, 10}; historical clusters {0,0.5,1.2}->0, {1}->1, {10,11}->10.
        let xs = [0.0, 0.5, 1.2, 1.0, 10.0, 11.0];
        let ps = PointSet::from_line(&xs).unwrap();
        let hist = Clustering::new(
            vec![Center::from_point(&ps, 0), Center::from_point(&ps, 3), Center::from_point(&ps, 4)],
            vec![0, 0, 0, 1, 2, 2],
        )
        .unwrap();
        let inst = Instance::new(&ps, 3, &hist, 6).unwrap();
        let r = Radius::of(1.0);
        // carve(2r = 2): picks 0 (deletes 0, .5, 1.2, 1), then 10 (deletes 10, 11)
        // weights at r=1: w(0) = 2 (0, .5), w(1) = 1, w(10) = 2
        let sol = greedy_and_project(&inst, r, 0);
        let sites: Vec<f64> = sol.clustering.centers.iter().map(|c| c.coords[0]).collect();
        assert_eq!(sites, vec![0.0, 10.0, 1.0]);
        assert!(sol.feasible);
        assert!(sol.cost <= 3.0 * r.get());
        // 1.2 is 1.2 from its historical center, so it must move
        assert_eq!(sol.reassignments, 1);
    }
}
