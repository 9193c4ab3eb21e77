use core::fmt;
use core::str::FromStr;

use alloc::format;

use crate::clustering::{delta_unchecked, max_cost, Clustering, Instance, Radius};
use crate::error::Error;

/// Which routine produced a clustering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    /// GreedyAndProject.
    Gap,
    /// OverCover with greedy guess of the preserved historical centers.
    OverCoverGreedy,
    /// OverCover enumerating every subset of historical centers.
    OverCoverExact,
    Carve,
    Fft,
    Oracle,
    Idealized,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Gap => "gap",
            Algorithm::OverCoverGreedy => "overcover",
            Algorithm::OverCoverExact => "overcover-exact",
            Algorithm::Carve => "carve",
            Algorithm::Fft => "fft",
            Algorithm::Oracle => "oracle",
            Algorithm::Idealized => "idealized",
        }
    }

    /// Whether the routine takes the relabeling budget into account.
    pub fn is_label_consistent(self) -> bool {
        matches!(self, Algorithm::Gap | Algorithm::OverCoverGreedy | Algorithm::OverCoverExact | Algorithm::Oracle | Algorithm::Idealized)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "gap" | "greedy-and-project" => Algorithm::Gap,
            "overcover" | "overcover-greedy" => Algorithm::OverCoverGreedy,
            "overcover-exact" => Algorithm::OverCoverExact,
            "carve" => Algorithm::Carve,
            "fft" => Algorithm::Fft,
            "oracle" => Algorithm::Oracle,
            "idealized" => Algorithm::Idealized,
            other => return Err(Error::invalid(format!("unknown algorithm `{other}`"))),
        })
    }
}

/// A clustering of an instance's points plus how good and how consistent it is.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub clustering: Clustering,
    /// Radius guess the solution was built for.
    pub radius: Radius,
    pub cost: f64,
    /// Points whose label differs from the historical clustering.
    pub reassignments: usize,
    /// At most `k` centers and at most `budget` reassignments.
    pub feasible: bool,
    pub algorithm: Algorithm,
    /// Wall-clock seconds; left at zero by this crate, filled in by timed callers.
    pub elapsed: f64,
}

impl Solution {
    /// Scores `clustering` against `inst`.
    pub fn evaluate(inst: &Instance<'_>, clustering: Clustering, radius: Radius, algorithm: Algorithm) -> Self {
        debug_assert_eq!(clustering.labels.len(), inst.n());
        let cost = max_cost(inst.points, &clustering);
        let reassignments = delta_unchecked(&clustering, inst.hist);
        let feasible = clustering.centers.len() <= inst.k && reassignments <= inst.budget;
        Solution { clustering, radius, cost, reassignments, feasible, algorithm, elapsed: 0.0 }
    }

    pub fn num_centers(&self) -> usize {
        self.clustering.centers.len()
    }
}
