//! Refinement: spend leftover budget moving the farthest points to strictly
//! closer centers. The center set never changes.

use alloc::vec::Vec;

use crate::clustering::{nearest_center, Instance};
use crate::error::{Error, Result};
use crate::solution::Solution;

/// Refines a feasible solution.
///
/// A point already off its historical label moves to its nearest center for
/// free. A point still on its historical label moves only if its nearest
/// center is strictly closer and budget remains, farthest points first (ties
/// to the lowest index). Cost never increases and the budget is never
/// exceeded.
pub fn refine(inst: &Instance<'_>, sol: &Solution) -> Result<Solution> {
    if !sol.feasible {
        return Err(Error::invalid("refine needs a feasible solution"));
    }
    let ps = inst.points;
    let centers = &sol.clustering.centers;
    let mut labels = sol.clustering.labels.clone();
    // position of each historical center in the solution, by coordinates
    let open: Vec<Option<usize>> = inst.hist.centers.iter().map(|h| sol.clustering.position_of(h)).collect();
    let on_history = |x: usize, label: usize| open[inst.hist.labels[x]] == Some(label);

    let mut paid: Vec<(f64, usize, usize)> = Vec::new();
    for x in 0..ps.len() {
        let current = centers[labels[x]].dist_from(ps, x);
        let (near, d) = nearest_center(ps, centers, x);
        if d >= current {
            continue;
        }
        if on_history(x, labels[x]) {
            paid.push((current, x, near));
        } else {
            labels[x] = near;
        }
    }

    let moved = labels.iter().enumerate().filter(|&(x, &l)| !on_history(x, l)).count();
    let mut left = inst.budget.saturating_sub(moved);
    paid.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, x, near) in paid {
        if left == 0 {
            break;
        }
        labels[x] = near;
        left -= 1;
    }

    let mut clustering = sol.clustering.clone();
    clustering.labels = labels;
    let mut out = Solution::evaluate(inst, clustering, sol.radius, sol.algorithm);
    out.elapsed = sol.elapsed;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustering::{assign, Center, Clustering, Radius};
    use crate::solution::Algorithm;
    use crate::space::PointSet;
    use alloc::vec;

    #[test]
    fn moves_far_point_with_spare_budget() {
        let ps = PointSet::from_line(&[0.0, 10.0]).unwrap();
        let hist = Clustering::new(vec![Center::from_point(&ps, 0)], vec![0, 0]).unwrap();
        let inst = Instance::new(&ps, 2, &hist, 1).unwrap();
        let current =
            Clustering::new(vec![Center::from_point(&ps, 0), Center::from_point(&ps, 1)], vec![0, 0]).unwrap();
        let sol = Solution::evaluate(&inst, current, Radius::of(10.0), Algorithm::Gap);
        assert_eq!(sol.cost, 10.0);
        let out = refine(&inst, &sol).unwrap();
        assert_eq!(out.clustering.labels, vec![0, 1]);
        assert_eq!(out.cost, 0.0);
        assert_eq!(out.reassignments, 1);

        // the only possible moves: leave 0 alone, move 10 (one unit of budget)
        let mut tight = inst.clone();
        tight.budget = 0;
        let sol = Solution::evaluate(&tight, sol.clustering, Radius::of(10.0), Algorithm::Gap);
        assert_eq!(refine(&tight, &sol).unwrap().clustering.labels, vec![0, 0]);
    }

    #[test]
    fn nearest_assignment_is_a_fixed_point() {
        let ps = PointSet::from_line(&[0.0, 1.0, 5.0, 6.0]).unwrap();
        let hist = Clustering::new(vec![Center::from_point(&ps, 0)], vec![0; 4]).unwrap();
        let inst = Instance::new(&ps, 2, &hist, 4).unwrap();
        let centers = vec![Center::from_point(&ps, 0), Center::from_point(&ps, 3)];
        let sol = Solution::evaluate(&inst, Clustering::nearest(&ps, centers).unwrap(), Radius::of(1.0), Algorithm::Gap);
        assert_eq!(refine(&inst, &sol).unwrap(), sol);
    }

    #[test]
    fn free_moves_do_not_spend_budget() {
        // point 2 (at 5) already moved off history to a far center; moving it
        // again is free even with no budget left
        let ps = PointSet::from_line(&[0.0, 1.0, 5.0, 9.0, 6.0]).unwrap();
        let hist = Clustering::new(vec![Center::from_point(&ps, 0)], vec![0; 5]).unwrap();
        let inst = Instance::new(&ps, 3, &hist, 2).unwrap();
        let centers = vec![Center::from_point(&ps, 0), Center::from_point(&ps, 3), Center::from_point(&ps, 4)];
        let current = Clustering::new(centers, vec![0, 0, 1, 1, 0]).unwrap();
        let sol = Solution::evaluate(&inst, current, Radius::of(6.0), Algorithm::Gap);
        assert!(sol.feasible);
        let out = refine(&inst, &sol).unwrap();
        assert_eq!(out.clustering.labels[2], 2);
        assert_eq!(out.clustering.labels[4], 0);
        assert!(out.cost <= sol.cost);
        assert!(out.reassignments <= inst.budget);
    }

    #[test]
    fn infeasible_input_is_rejected() {
        let ps = PointSet::from_line(&[0.0, 10.0]).unwrap();
        let hist = Clustering::new(vec![Center::from_point(&ps, 0)], vec![0, 0]).unwrap();
        let inst = Instance::new(&ps, 1, &hist, 0).unwrap();
        let sol = assign(&inst, vec![Center::from_point(&ps, 1)], Radius::ZERO);
        let sol = Solution::evaluate(&inst, sol, Radius::ZERO, Algorithm::Gap);
        assert!(!sol.feasible);
        assert!(refine(&inst, &sol).is_err());
    }
}
