//! Farthest-first traversal (Gonzalez).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clustering::Center;
use crate::error::{Error, Result};
use crate::space::PointSet;

/// Picks `k` centers: the first is point 0 (seed 0) or a seeded uniform pick,
/// each next one is the point farthest from the centers so far, ties to the
/// lowest index.
///
/// Stops early if every remaining point coincides with a chosen center, so
/// the result can be shorter than `k` on inputs with duplicate points.
pub fn fft(ps: &PointSet, k: usize, seed: u64) -> Result<Vec<Center>> {
    Ok(fft_indices(ps, k, seed)?.into_iter().map(|i| Center::from_point(ps, i)).collect())
}

pub fn fft_indices(ps: &PointSet, k: usize, seed: u64) -> Result<Vec<usize>> {
    let n = ps.len();
    if k == 0 || k > n {
        return Err(Error::invalid(format!("farthest-first traversal needs 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let first = if seed == 0 { 0 } else { ChaCha8Rng::seed_from_u64(seed).random_range(0..n) };
    let mut picked = vec![first];
    let mut gap: Vec<f64> = (0..n).map(|x| ps.dist(x, first)).collect();
    while picked.len() < k {
        let (far, d) = gap.iter().enumerate().fold((0, f64::NEG_INFINITY), |best, (i, &d)| if d > best.1 { (i, d) } else { best });
        if d <= 0.0 {
            break;
        }
        picked.push(far);
        for (x, g) in gap.iter_mut().enumerate() {
            let d = ps.dist(x, far);
            if d < *g {
                *g = d;
            }
        }
    }
    Ok(picked)
}
