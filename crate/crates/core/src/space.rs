//! Point sets in Euclidean space.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Distance function tag. Only Euclidean is supported for now.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Metric {
    #[default]
    Euclidean,
}

/// The dataset `X`: `n` points of dimension `dim`, stored row-major.
///
/// All distance queries go through this type. An optional upper-triangular
/// cache of point-to-point distances can be built with
/// [`PointSet::cache_distances`].
#[derive(Debug, Clone)]
pub struct PointSet {
    dim: usize,
    coords: Vec<f64>,
    metric: Metric,
    cache: Option<Vec<f64>>,
}

/// Default upper bound on `n` for building the distance cache.
pub const DEFAULT_CACHE_CAP: usize = 20_000;

/// Euclidean distance between two coordinate slices of equal length.
#[inline]
pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        acc += d * d;
    }
    libm::sqrt(acc)
}

impl PointSet {
    /// Builds a point set from row-major coordinates.
    pub fn new(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dimension must be positive"));
        }
        if coords.len() % dim != 0 {
            return Err(Error::DimensionMismatch { expected: dim, found: coords.len() % dim });
        }
        if let Some(pos) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::invalid(alloc::format!("non-finite coordinate in point {}", pos / dim)));
        }
        // -0.0 and 0.0 must compare bit-equal for center identity.
        let coords = coords.into_iter().map(|c| if c == 0.0 { 0.0 } else { c }).collect();
        Ok(PointSet { dim, coords, metric: Metric::Euclidean, cache: None })
    }

    /// Builds a point set from a list of rows, all of which must share a length.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.first().map(|r| r.as_ref().len()).ok_or_else(|| Error::invalid("empty point set"))?;
        let mut coords = Vec::with_capacity(dim * rows.len());
        for row in rows {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            coords.extend_from_slice(row);
        }
        Self::new(dim, coords)
    }

    /// One-dimensional convenience constructor.
    pub fn from_line(values: &[f64]) -> Result<Self> {
        Self::new(1, values.to_vec())
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    /// The first `n` points as a new set.
    pub fn prefix(&self, n: usize) -> PointSet {
        let n = n.min(self.len());
        PointSet { dim: self.dim, coords: self.coords[..n * self.dim].to_vec(), metric: self.metric, cache: None }
    }

    /// The points at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> PointSet {
        let mut coords = Vec::with_capacity(indices.len() * self.dim);
        for &i in indices {
            coords.extend_from_slice(self.point(i));
        }
        PointSet { dim: self.dim, coords, metric: self.metric, cache: None }
    }

    /// Builds the pairwise distance cache if `n <= cap`. Returns whether the
    /// cache is present afterwards.
    pub fn cache_distances(&mut self, cap: usize) -> bool {
        let n = self.len();
        if self.cache.is_none() && n <= cap {
            let mut tri = Vec::with_capacity(n * n.saturating_sub(1) / 2);
            for i in 0..n {
                for j in i + 1..n {
                    tri.push(euclidean(self.point(i), self.point(j)));
                }
            }
            self.cache = Some(tri);
        }
        self.cache.is_some()
    }

    pub fn has_cache(&self) -> bool {
        self.cache.is_some()
    }

    /// Distance between points `i` and `j`.
    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        match &self.cache {
            Some(tri) => {
                let (a, b) = if i < j { (i, j) } else { (j, i) };
                let n = self.len();
                // row a starts after sum_{r<a} (n-1-r) entries
                tri[a * (2 * n - a - 1) / 2 + (b - a - 1)]
            }
            None => euclidean(self.point(i), self.point(j)),
        }
    }

    /// Distance between point `i` and an arbitrary coordinate vector.
    #[inline]
    pub fn dist_to(&self, i: usize, coords: &[f64]) -> f64 {
        euclidean(self.point(i), coords)
    }

    /// Checked distance between two coordinate vectors of this space.
    pub fn distance(&self, a: &[f64], b: &[f64]) -> Result<f64> {
        for v in [a, b] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
            }
        }
        Ok(euclidean(a, b))
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }
}
