//! CARVE: greedy ball carving.
//!
//! Repeatedly picks a surviving point and deletes every survivor within the
//! deletion radius of it. The picked points are pairwise more than the radius
//! apart and every input point lies within the radius of one of them.
//! Callers that want the k-center covering at radius `r` pass `2r`.

use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clustering::{Center, Radius};
use crate::space::PointSet;

/// Carves `subset` with deletion radius `r`.
///
/// With `seed == 0` the pick is always the lowest surviving index; any other
/// seed picks uniformly among survivors. An empty subset yields no centers.
pub fn carve(ps: &PointSet, subset: &[usize], r: Radius, seed: u64) -> Vec<Center> {
    carve_indices(ps, subset, r, seed, None)
        .unwrap_or_default()
        .into_iter()
        .map(|i| Center::from_point(ps, i))
        .collect()
}

/// Carves every point of `ps`.
pub fn carve_all(ps: &PointSet, r: Radius, seed: u64) -> Vec<Center> {
    let all: Vec<usize> = (0..ps.len()).collect();
    carve(ps, &all, r, seed)
}

/// Index-level CARVE. Gives up and returns `None` as soon as more than
/// `limit` centers have been picked.
pub(crate) fn carve_indices(
    ps: &PointSet,
    subset: &[usize],
    r: Radius,
    seed: u64,
    limit: Option<usize>,
) -> Option<Vec<usize>> {
    let mut alive: Vec<usize> = subset.to_vec();
    let mut rng = (seed != 0).then(|| ChaCha8Rng::seed_from_u64(seed));
    let mut picked = Vec::new();
    while !alive.is_empty() {
        if limit.is_some_and(|l| picked.len() >= l) {
            return None;
        }
        let s = match rng.as_mut() {
            Some(rng) => alive[rng.random_range(0..alive.len())],
            None => alive[0],
        };
        picked.push(s);
        alive.retain(|&x| ps.dist(x, s) > r.get());
    }
    Some(picked)
}
