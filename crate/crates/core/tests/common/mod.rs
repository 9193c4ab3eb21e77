#![allow(dead_code)]

use lckc_core::{Center, Clustering, PointSet};
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A small random instance: points uniform in the unit square, `k` historical
/// centers drawn from the points, labels either nearest-center or arbitrary.
#[derive(Debug, Clone)]
pub struct Small {
    pub points: PointSet,
    pub hist: Clustering,
    pub k: usize,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_points(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> PointSet {
    let coords = (0..n * dim).map(|_| rng.random::<f64>()).collect();
    PointSet::new(dim, coords).unwrap()
}

/// How historical labels are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HistLabels {
    /// Every point labeled with its nearest historical center.
    Nearest,
    /// Labels drawn uniformly at random.
    Arbitrary,
    /// Either of the above with equal probability.
    Mixed,
}

pub fn small_instance(seed: u64, max_n: usize, max_k: usize, mode: HistLabels) -> Small {
    let mut rng = rng(seed);
    let n = rng.random_range(2..=max_n);
    let k = rng.random_range(1..=max_k.min(n));
    let points = uniform_points(&mut rng, n, 2);
    let picks = sample(&mut rng, n, k).into_vec();
    let centers: Vec<Center> = picks.iter().map(|&i| Center::from_point(&points, i)).collect();
    let nearest = match mode {
        HistLabels::Nearest => true,
        HistLabels::Arbitrary => false,
        HistLabels::Mixed => rng.random_bool(0.5),
    };
    let hist = if nearest {
        Clustering::nearest(&points, centers).unwrap()
    } else {
        let labels = (0..n).map(|_| rng.random_range(0..k)).collect();
        Clustering::new(centers, labels).unwrap()
    };
    Small { points, hist, k }
}

pub fn budgets(n: usize) -> [usize; 3] {
    [0, n.div_ceil(4), n]
}

/// Exact k-center radius by trying every center subset of size at most `k`,
/// written independently of the library oracle.
pub fn kcenter_by_subsets(ps: &PointSet, k: usize) -> f64 {
    let n = ps.len();
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << n) {
        if mask.count_ones() as usize > k {
            continue;
        }
        let mut worst: f64 = 0.0;
        for x in 0..n {
            let near = (0..n).filter(|c| mask & (1 << c) != 0).map(|c| ps.dist(x, c)).fold(f64::INFINITY, f64::min);
            worst = worst.max(near);
        }
        best = best.min(worst);
    }
    best
}
