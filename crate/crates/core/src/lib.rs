//! Solvers for the label-consistent k-center problem.
//!
//! Given a point set `X`, a historical clustering `H` of `X`, a center budget
//! `k` and a relabeling budget `b`, find a k-center clustering of `X` whose
//! labels differ from the historical ones on at most `b` points.
//!
//! The crate is `no_std` and only needs `alloc`. IO, timing, experiment
//! harnesses and the command line live in the `lckc` companion crate.
//!
//! Module map:
//! - [`space`]: point sets and Euclidean distances.
//! - [`clustering`]: centers, clusterings, instances and the shared primitives
//!   (cost, clustering distance, weights, historical neighborhoods, assignment).
//! - [`carve`] and [`fft`]: the two classical k-center routines.
//! - [`gap`]: GreedyAndProject, the polynomial 3-approximation.
//! - [`overcover`]: the exact (2^|H|) 2-approximation and its greedy variant.
//! - [`refine`]: spends leftover budget on moving far points closer.
//! - [`search`]: radius grids and the search wrapper that ties it together.
//! - [`oracle`]: brute-force exact solver and the idealized analysis algorithm.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod carve;
pub mod clustering;
mod error;
pub mod fft;
pub mod gap;
pub mod oracle;
pub mod overcover;
pub mod refine;
pub mod search;
pub mod solution;
pub mod space;

pub use carve::carve;
pub use clustering::{assign, cost, delta, neighbors, weight, weights, Center, CenterOrigin, Clustering, Instance, Radius};
pub use error::{Error, Result};
pub use fft::fft;
pub use gap::greedy_and_project;
pub use overcover::{overcover_exact, overcover_greedy};
pub use refine::refine;
pub use search::{solve, Algorithm, RadiusMode, RadiusSearchConfig};
pub use solution::Solution;
pub use space::PointSet;
