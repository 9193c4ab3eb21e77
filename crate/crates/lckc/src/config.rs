//! TOML run files: a `[dataset]` table and a `[sweep]` table.
//!
//! ```toml
//! [dataset]
//! path = "data/abalone.data"
//! preset = "abalone"
//!
//! [sweep]
//! k_list = [20]
//! budget_list = [0, 50, "frac:0.1"]
//! hist_algo = "carve"
//! algo_list = ["gap", "overcover"]
//! seeds = [0, 1, 2]
//! radius = "exact"
//! ```

use std::path::Path;

use lckc_core::{Algorithm, RadiusMode, RadiusSearchConfig};
use serde::Deserialize;

use crate::dataset::DatasetConfig;
use crate::error::{config, Error, Result};
use crate::harness::{HistAlgo, SweepSpec};
use crate::records::Budget;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepTable {
    #[serde(default)]
    pub k_list: Vec<usize>,
    #[serde(default)]
    pub budget_list: Vec<Budget>,
    #[serde(default)]
    pub hist_algo: Option<String>,
    #[serde(default)]
    pub algo_list: Vec<String>,
    #[serde(default)]
    pub seeds: Vec<u64>,
    /// `exact`, `exact-linear` or `geom:EPS`.
    #[serde(default)]
    pub radius: Option<String>,
    #[serde(default)]
    pub fallback: Option<bool>,
    #[serde(default)]
    pub refine: bool,
    #[serde(default)]
    pub threads: Option<usize>,
    /// Number of slices for `evolve`.
    #[serde(default)]
    pub t: Option<usize>,
    /// Prefix sizes for `bench`.
    #[serde(default)]
    pub n_prefix_list: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunFile {
    pub dataset: DatasetConfig,
    #[serde(default)]
    pub sweep: Option<SweepTable>,
}

impl RunFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| config(e.to_string()))
    }

    /// Reads a run file; relative dataset paths resolve against its directory.
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut run = RunFile::parse(&text).map_err(|e| config(format!("{}: {e}", path.display())))?;
        if run.dataset.path.is_relative() {
            if let Some(dir) = path.parent() {
                run.dataset.path = dir.join(&run.dataset.path);
            }
        }
        Ok(run)
    }
}

pub fn parse_radius(mode: &str, fallback: bool) -> Result<RadiusSearchConfig> {
    let mode: RadiusMode = mode.parse().map_err(|e| config(format!("{e}")))?;
    Ok(RadiusSearchConfig { mode, fallback })
}

pub fn parse_algo(name: &str) -> Result<Algorithm> {
    name.parse().map_err(|e| config(format!("{e}")))
}

impl SweepTable {
    /// Merges the table into `spec`; fields left out keep their value in `spec`.
    pub fn apply(&self, spec: &mut SweepSpec) -> Result<()> {
        if !self.k_list.is_empty() {
            spec.k_list = self.k_list.clone();
        }
        if !self.budget_list.is_empty() {
            spec.budget_list = self.budget_list.clone();
        }
        if let Some(h) = &self.hist_algo {
            spec.hist_algo = h.parse::<HistAlgo>()?;
        }
        if !self.algo_list.is_empty() {
            spec.algo_list = self.algo_list.iter().map(|a| parse_algo(a)).collect::<Result<_>>()?;
        }
        if !self.seeds.is_empty() {
            spec.seeds = self.seeds.clone();
        }
        if let Some(r) = &self.radius {
            spec.radius = parse_radius(r, self.fallback.unwrap_or(spec.radius.fallback))?;
        } else if let Some(f) = self.fallback {
            spec.radius.fallback = f;
        }
        spec.refine |= self.refine;
        if self.threads.is_some() {
            spec.threads = self.threads;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{Normalization, Preset};

    #[test]
    fn run_file_round_trips_into_a_spec() {
        let run = RunFile::parse(
            r#"
            [dataset]
            path = "abalone.data"
            preset = "abalone"
            normalization = "zscore"

            [sweep]
            k_list = [10, 20]
            budget_list = [0, 25, "frac:0.5"]
            hist_algo = "fft"
            algo_list = ["gap", "overcover-exact"]
            seeds = [3]
            radius = "geom:0.1"
            refine = true
            "#,
        )
        .unwrap();
        assert_eq!(run.dataset.preset, Some(Preset::Abalone));
        assert_eq!(run.dataset.normalization, Normalization::Zscore);
        let mut spec = SweepSpec::new("abalone", vec![1], vec![]);
        run.sweep.unwrap().apply(&mut spec).unwrap();
        assert_eq!(spec.k_list, vec![10, 20]);
        assert_eq!(spec.budget_list, vec![Budget::Absolute(0), Budget::Absolute(25), Budget::Fraction(0.5)]);
        assert_eq!(spec.hist_algo, HistAlgo::Fft);
        assert_eq!(spec.algo_list, vec![Algorithm::Gap, Algorithm::OverCoverExact]);
        assert_eq!(spec.radius.mode, RadiusMode::Geometric { eps: 0.1 });
        assert!(spec.refine);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(RunFile::parse("[dataset]\npath = \"x\"\ncolour = 1\n").is_err());
        assert!(RunFile::parse("[dataset]\npath = \"x\"\n[sweep]\nbudget_list = [-1]\n").is_err());
    }
}
