#![allow(dead_code)]

use lckc::core::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n` points in the plane: a few tight blobs plus uniform noise.
pub fn blobs(n: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let centers: Vec<[f64; 2]> = (0..6).map(|_| [rng.random::<f64>() * 10.0, rng.random::<f64>() * 10.0]).collect();
    let mut coords = Vec::with_capacity(2 * n);
    for i in 0..n {
        if i % 5 == 4 {
            coords.extend([rng.random::<f64>() * 10.0, rng.random::<f64>() * 10.0]);
        } else {
            let c = centers[rng.random_range(0..centers.len())];
            coords.extend([c[0] + rng.random::<f64>() - 0.5, c[1] + rng.random::<f64>() - 0.5]);
        }
    }
    PointSet::new(2, coords).unwrap()
}

pub fn uniform(n: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PointSet::new(2, (0..2 * n).map(|_| rng.random::<f64>()).collect()).unwrap()
}
