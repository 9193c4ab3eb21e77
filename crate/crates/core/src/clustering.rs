//! Centers, clusterings, problem instances and the primitives every solver
//! shares: cost, clustering distance, weights, historical neighborhoods and
//! the budget-aware assignment rule.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::space::PointSet;

/// A non-negative radius in dataset distance units.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Radius(f64);

impl Radius {
    pub const ZERO: Radius = Radius(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value < 0.0 {
            return Err(Error::invalid(format!("radius must be non-negative, got {value}")));
        }
        Ok(Radius(value))
    }

    /// Panics on negative or NaN input; for literals and grid values.
    pub fn of(value: f64) -> Self {
        Self::new(value).expect("invalid radius")
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// The CARVE deletion radius used by both solvers.
    #[inline]
    pub fn doubled(self) -> Radius {
        Radius(2.0 * self.0)
    }
}

/// Where a center's coordinates came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterOrigin {
    /// Point `i` of the current point set.
    DatasetIndex(usize),
    /// Not a point of the current set, e.g. a center carried over from an
    /// earlier time slice.
    External,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Center {
    pub coords: Vec<f64>,
    pub origin: CenterOrigin,
}

impl Center {
    pub fn from_point(ps: &PointSet, i: usize) -> Self {
        Center { coords: ps.point(i).to_vec(), origin: CenterOrigin::DatasetIndex(i) }
    }

    pub fn external(coords: Vec<f64>) -> Self {
        let coords = coords.into_iter().map(|c| if c == 0.0 { 0.0 } else { c }).collect();
        Center { coords, origin: CenterOrigin::External }
    }

    /// Center identity: exact coordinate equality.
    #[inline]
    pub fn same_site(&self, other: &Center) -> bool {
        self.coords == other.coords
    }

    /// Distance from point `i` of `ps` to this center.
    #[inline]
    pub fn dist_from(&self, ps: &PointSet, i: usize) -> f64 {
        match self.origin {
            CenterOrigin::DatasetIndex(j) => ps.dist(i, j),
            CenterOrigin::External => ps.dist_to(i, &self.coords),
        }
    }

    pub fn as_external(&self) -> Center {
        Center { coords: self.coords.clone(), origin: CenterOrigin::External }
    }
}

/// A set of centers plus one label (an index into `centers`) per point.
#[derive(Debug, Clone, PartialEq)]
pub struct Clustering {
    pub centers: Vec<Center>,
    pub labels: Vec<usize>,
}

impl Clustering {
    /// Validates labels and center distinctness.
    pub fn new(centers: Vec<Center>, labels: Vec<usize>) -> Result<Self> {
        let c = Clustering { centers, labels };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some((x, &l)) = self.labels.iter().enumerate().find(|(_, &l)| l >= self.centers.len()) {
            return Err(Error::invalid(format!("point {x} labeled with missing center {l}")));
        }
        for (i, a) in self.centers.iter().enumerate() {
            if let Some(j) = self.centers[..i].iter().position(|b| b.same_site(a)) {
                return Err(Error::invalid(format!("centers {j} and {i} coincide")));
            }
        }
        Ok(())
    }

    /// Labels every point with its nearest center, ties to the lowest index.
    pub fn nearest(ps: &PointSet, centers: Vec<Center>) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::invalid("cannot assign to an empty center set"));
        }
        let labels = (0..ps.len()).map(|x| nearest_center(ps, &centers, x).0).collect();
        Clustering::new(centers, labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Center serving point `x`.
    #[inline]
    pub fn center_of(&self, x: usize) -> &Center {
        &self.centers[self.labels[x]]
    }

    /// Distance from point `x` to its assigned center.
    #[inline]
    pub fn assignment_distance(&self, ps: &PointSet, x: usize) -> f64 {
        self.center_of(x).dist_from(ps, x)
    }

    /// Position of a center with the same coordinates, if any.
    pub fn position_of(&self, c: &Center) -> Option<usize> {
        self.centers.iter().position(|h| h.same_site(c))
    }
}

/// Nearest center to point `x` and its distance; ties go to the lowest index.
pub fn nearest_center(ps: &PointSet, centers: &[Center], x: usize) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (i, c) in centers.iter().enumerate() {
        let d = c.dist_from(ps, x);
        if d < best.1 {
            best = (i, d);
        }
    }
    best
}

/// A label-consistent k-center problem: points, center budget `k`,
/// historical clustering and relabeling budget `budget`.
#[derive(Debug, Clone)]
pub struct Instance<'a> {
    pub points: &'a PointSet,
    pub k: usize,
    pub hist: &'a Clustering,
    pub budget: usize,
    hist_dist: Vec<f64>,
}

impl<'a> Instance<'a> {
    pub fn new(points: &'a PointSet, k: usize, hist: &'a Clustering, budget: usize) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::invalid("empty point set"));
        }
        if k == 0 {
            return Err(Error::invalid("k must be positive"));
        }
        if hist.labels.len() != n {
            return Err(Error::invalid(format!(
                "historical clustering labels {} points, point set has {n}",
                hist.labels.len()
            )));
        }
        if hist.centers.len() > k {
            return Err(Error::invalid(format!("{} historical centers exceed k = {k}", hist.centers.len())));
        }
        if budget > n {
            return Err(Error::invalid(format!("budget {budget} exceeds n = {n}")));
        }
        for c in &hist.centers {
            if c.coords.len() != points.dim() {
                return Err(Error::DimensionMismatch { expected: points.dim(), found: c.coords.len() });
            }
        }
        hist.validate()?;
        let hist_dist = (0..n).map(|x| hist.assignment_distance(points, x)).collect();
        Ok(Instance { points, k, hist, budget, hist_dist })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// `d(x, l_H(x))`.
    #[inline]
    pub fn hist_distance(&self, x: usize) -> f64 {
        self.hist_dist[x]
    }

    /// Number of points that cannot keep their historical label at radius `r`
    /// even if every historical center stays open.
    pub fn forced_reassignments(&self, r: Radius) -> usize {
        self.hist_dist.iter().filter(|&&d| d > r.get()).count()
    }
}

/// Exponent `p` of the k-clustering cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CostExponent {
    Finite(f64),
    Infinity,
}

/// `cost_p`: `(sum_x d(x, l(x))^p)^(1/p)`, or the maximum assignment distance
/// for `p = inf`.
pub fn cost(ps: &PointSet, c: &Clustering, p: CostExponent) -> Result<f64> {
    if c.labels.len() != ps.len() {
        return Err(Error::invalid(format!("clustering labels {} of {} points", c.labels.len(), ps.len())));
    }
    if let Some(l) = c.labels.iter().find(|&&l| l >= c.centers.len()) {
        return Err(Error::invalid(format!("label {l} has no center")));
    }
    let dists = (0..ps.len()).map(|x| c.assignment_distance(ps, x));
    match p {
        CostExponent::Infinity => Ok(dists.fold(0.0, f64::max)),
        CostExponent::Finite(p) if p >= 1.0 => Ok(libm::pow(dists.map(|d| libm::pow(d, p)).sum::<f64>(), 1.0 / p)),
        CostExponent::Finite(p) => Err(Error::invalid(format!("cost exponent must be >= 1, got {p}"))),
    }
}

/// `cost_inf` without validation; `c` must label every point of `ps`.
pub(crate) fn max_cost(ps: &PointSet, c: &Clustering) -> f64 {
    (0..ps.len()).map(|x| c.assignment_distance(ps, x)).fold(0.0, f64::max)
}

/// Clustering distance: the number of points whose assigned center differs,
/// centers being compared by coordinates.
pub fn delta(a: &Clustering, b: &Clustering) -> Result<usize> {
    if a.labels.len() != b.labels.len() {
        return Err(Error::invalid(format!(
            "clusterings cover {} and {} points",
            a.labels.len(),
            b.labels.len()
        )));
    }
    Ok(delta_unchecked(a, b))
}

pub(crate) fn delta_unchecked(a: &Clustering, b: &Clustering) -> usize {
    // Resolve center identity once per center pair instead of per point.
    let map: Vec<Option<usize>> = a.centers.iter().map(|c| b.position_of(c)).collect();
    a.labels.iter().zip(&b.labels).filter(|(&la, &lb)| map[la] != Some(lb)).count()
}

/// Weights of all historical centers at radius `r`: for each `h`, the number
/// of points historically labeled `h` that lie within `r` of it.
pub fn weights(inst: &Instance<'_>, r: Radius) -> Vec<usize> {
    let mut w = vec![0usize; inst.hist.centers.len()];
    for (x, &h) in inst.hist.labels.iter().enumerate() {
        if inst.hist_distance(x) <= r.get() {
            w[h] += 1;
        }
    }
    w
}

/// Weight of a single historical center, looked up by coordinates.
pub fn weight(inst: &Instance<'_>, h: &Center, r: Radius) -> Result<usize> {
    let idx = inst.hist.position_of(h).ok_or_else(|| Error::invalid("not a historical center"))?;
    Ok(weights(inst, r)[idx])
}

/// Indices of the historical centers within distance `r` of `x`, ascending.
pub fn neighbors(inst: &Instance<'_>, x: &[f64], r: Radius) -> Vec<usize> {
    inst.hist
        .centers
        .iter()
        .enumerate()
        .filter(|(_, h)| crate::space::euclidean(x, &h.coords) <= r.get())
        .map(|(i, _)| i)
        .collect()
}

/// Historical neighborhood of an already-materialized center; uses the
/// distance cache when both sides are dataset points.
pub(crate) fn center_neighbors(inst: &Instance<'_>, c: &Center, r: Radius) -> Vec<usize> {
    match c.origin {
        crate::clustering::CenterOrigin::DatasetIndex(i) => inst
            .hist
            .centers
            .iter()
            .enumerate()
            .filter(|(_, h)| h.dist_from(inst.points, i) <= r.get())
            .map(|(j, _)| j)
            .collect(),
        CenterOrigin::External => neighbors(inst, &c.coords, r),
    }
}

/// Labels every point against `centers`.
///
/// A point keeps its historical label when its historical center is among
/// `centers` and lies within `r`; otherwise it goes to its nearest center
/// (ties to the lowest index).
pub fn assign(inst: &Instance<'_>, centers: Vec<Center>, r: Radius) -> Clustering {
    assert!(!centers.is_empty(), "assign needs at least one center");
    let open: Vec<Option<usize>> = inst.hist.centers.iter().map(|h| centers.iter().position(|c| c.same_site(h))).collect();
    let labels = (0..inst.n())
        .map(|x| match open[inst.hist.labels[x]] {
            Some(pos) if inst.hist_distance(x) <= r.get() => pos,
            _ => nearest_center(inst.points, &centers, x).0,
        })
        .collect();
    Clustering { centers, labels }
}
