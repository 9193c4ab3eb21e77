//! Result files (one experiment record per row) and labels files.

use std::fmt;
use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use lckc_core::{Center, Clustering, PointSet};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{config, Error, Result};

/// Column order of result files.
pub const RESULT_COLUMNS: [&str; 12] =
    ["setup", "dataset", "hist_algo", "algo", "k", "b", "slice", "cost", "updates", "runtime", "seed", "radius_used"];

/// A relabeling budget, either absolute or as a fraction of the instance size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Budget {
    Absolute(usize),
    Fraction(f64),
}

impl Budget {
    /// Resolves against an instance of `n` points: fractions round down and
    /// everything is capped at `n`.
    pub fn resolve(self, n: usize) -> usize {
        match self {
            Budget::Absolute(b) => b.min(n),
            Budget::Fraction(f) => ((f * n as f64 + 1e-9).floor() as usize).min(n),
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Absolute(b) => write!(f, "{b}"),
            Budget::Fraction(x) => write!(f, "frac:{x}"),
        }
    }
}

impl FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(frac) = s.strip_prefix("frac:") {
            return match frac.parse::<f64>() {
                Ok(x) if (0.0..=1.0).contains(&x) => Ok(Budget::Fraction(x)),
                _ => Err(config(format!("budget fraction must be in [0, 1], got `{frac}`"))),
            };
        }
        s.parse().map(Budget::Absolute).map_err(|_| config(format!("bad budget `{s}` (want an integer or frac:X)")))
    }
}

impl Serialize for Budget {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

struct BudgetVisitor;

impl serde::de::Visitor<'_> for BudgetVisitor {
    type Value = Budget;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a non-negative integer or a `frac:X` string")
    }

    fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Budget, E> {
        Ok(Budget::Absolute(v as usize))
    }

    fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Budget, E> {
        usize::try_from(v).map(Budget::Absolute).map_err(|_| E::custom(format!("negative budget {v}")))
    }

    fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Budget, E> {
        v.parse().map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Budget {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(BudgetVisitor)
    }
}

/// Rounds to 9 significant digits, the precision written to result files.
pub fn round_sig9(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.8e}").parse().unwrap_or(v)
}

fn sig9<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig9(*v))
}

/// One row of a result file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub setup: String,
    pub dataset: String,
    pub hist_algo: String,
    pub algo: String,
    pub k: usize,
    /// Empty for algorithms that ignore the budget.
    pub b: Option<Budget>,
    pub slice: Option<usize>,
    #[serde(serialize_with = "sig9")]
    pub cost: f64,
    pub updates: usize,
    #[serde(serialize_with = "sig9")]
    pub runtime: f64,
    pub seed: u64,
    #[serde(serialize_with = "sig9")]
    pub radius_used: f64,
}

impl ExperimentRecord {
    /// The record as it reads back from a file.
    pub fn rounded(&self) -> Self {
        ExperimentRecord {
            cost: round_sig9(self.cost),
            runtime: round_sig9(self.runtime),
            radius_used: round_sig9(self.radius_used),
            ..self.clone()
        }
    }
}

pub fn write_records_to<W: Write>(records: &[ExperimentRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(RESULT_COLUMNS)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| Error::io("<results>", e))?;
    Ok(())
}

pub fn write_records(records: &[ExperimentRecord], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_records_to(records, file)
}

pub fn read_records(path: &Path) -> Result<Vec<ExperimentRecord>> {
    let mut r = csv::Reader::from_path(path)?;
    let header = r.headers()?;
    if header.iter().ne(RESULT_COLUMNS) {
        return Err(config(format!("{}: unexpected header {header:?}", path.display())));
    }
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

/// Path of the provenance note written next to a result file.
pub fn provenance_path(results: &Path) -> PathBuf {
    let mut name = results.file_name().unwrap_or_default().to_os_string();
    name.push(".provenance");
    results.with_file_name(name)
}

/// Writes `key=value` lines describing how a result file was produced.
pub fn write_provenance(results: &Path, entries: &[(&str, String)]) -> Result<()> {
    let path = provenance_path(results);
    let mut f = File::create(&path).map_err(|e| Error::io(&path, e))?;
    for (k, v) in entries {
        writeln!(f, "{k}={v}").map_err(|e| Error::io(&path, e))?;
    }
    Ok(())
}

/// Writes `point,center,coord_0..coord_{d-1}`: one row per point with the
/// index of its center and the center's coordinates.
pub fn write_labels(path: &Path, ps: &PointSet, c: &Clustering) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(file);
    let mut header = vec!["point".to_string(), "center".to_string()];
    header.extend((0..ps.dim()).map(|j| format!("coord_{j}")));
    w.write_record(&header)?;
    let mut row = Vec::with_capacity(header.len());
    for (x, &label) in c.labels.iter().enumerate() {
        row.clear();
        row.push(x.to_string());
        row.push(label.to_string());
        row.extend(c.centers[label].coords.iter().map(|v| v.to_string()));
        w.write_record(&row)?;
    }
    w.flush().map_err(|e| Error::io(path, e))?;
    Ok(())
}

/// Reads a labels file written by [`write_labels`] (or by hand) for a set of
/// `n` points in dimension `dim`. Centers come back as external sites.
pub fn read_labels(path: &Path, n: usize, dim: usize) -> Result<Clustering> {
    let mut r = csv::Reader::from_path(path)?;
    let mut labels = vec![usize::MAX; n];
    let mut centers: Vec<Option<Vec<f64>>> = Vec::new();
    for record in r.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let row_err = |message: String| Error::Row { line, message };
        if record.len() != 2 + dim {
            return Err(row_err(format!("expected {} fields, found {}", 2 + dim, record.len())));
        }
        let num = |i: usize| record[i].trim().parse::<usize>().map_err(|_| row_err(format!("bad integer `{}`", &record[i])));
        let (x, label) = (num(0)?, num(1)?);
        if x >= n {
            return Err(row_err(format!("point {x} out of range for {n} points")));
        }
        let coords = record
            .iter()
            .skip(2)
            .map(|v| v.trim().parse::<f64>().map_err(|_| row_err(format!("bad coordinate `{v}`"))))
            .collect::<Result<Vec<_>>>()?;
        if centers.len() <= label {
            centers.resize(label + 1, None);
        }
        match &centers[label] {
            Some(prev) if *prev != coords => return Err(row_err(format!("center {label} has two coordinate sets"))),
            Some(_) => {}
            None => centers[label] = Some(coords),
        }
        labels[x] = label;
    }
    if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
        return Err(config(format!("{}: point {x} has no label", path.display())));
    }
    // Center indices nobody points at are dropped and the rest renumbered.
    let mut index = vec![usize::MAX; centers.len()];
    let mut kept = Vec::new();
    for (i, c) in centers.into_iter().enumerate() {
        if let Some(coords) = c {
            index[i] = kept.len();
            kept.push(Center::external(coords));
        }
    }
    let labels = labels.into_iter().map(|l| index[l]).collect();
    Ok(Clustering::new(kept, labels)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(b: Option<Budget>, slice: Option<usize>) -> ExperimentRecord {
        ExperimentRecord {
            setup: "setup1".into(),
            dataset: "toy".into(),
            hist_algo: "carve".into(),
            algo: "gap".into(),
            k: 3,
            b,
            slice,
            cost: 1.0 / 3.0,
            updates: 2,
            runtime: 0.000123456789123,
            seed: 7,
            radius_used: 2.5,
        }
    }

    fn lines(records: &[ExperimentRecord]) -> Vec<String> {
        let mut buf = Vec::new();
        write_records_to(records, &mut buf).unwrap();
        String::from_utf8(buf).unwrap().lines().map(str::to_owned).collect()
    }

    #[test]
    fn empty_file_is_header_only() {
        assert_eq!(lines(&[]), vec!["setup,dataset,hist_algo,algo,k,b,slice,cost,updates,runtime,seed,radius_used"]);
    }

    #[test]
    fn one_record_is_two_lines() {
        let got = lines(&[record(Some(Budget::Fraction(0.6)), None)]);
        assert_eq!(got.len(), 2);
        assert_eq!(got[1], "setup1,toy,carve,gap,3,frac:0.6,,0.333333333,2,0.000123456789,7,2.5");
        let got = lines(&[record(None, Some(4))]);
        assert_eq!(got[1], "setup1,toy,carve,gap,3,,4,0.333333333,2,0.000123456789,7,2.5");
    }

    #[test]
    fn budgets_parse_and_resolve() {
        assert_eq!("12".parse::<Budget>().unwrap(), Budget::Absolute(12));
        assert_eq!("frac:0.2".parse::<Budget>().unwrap(), Budget::Fraction(0.2));
        assert!("frac:1.5".parse::<Budget>().is_err());
        assert!("-1".parse::<Budget>().is_err());
        assert_eq!(Budget::Fraction(0.2).resolve(17), 3);
        assert_eq!(Budget::Fraction(0.6).resolve(10), 6);
        assert_eq!(Budget::Fraction(1.0).resolve(17), 17);
        assert_eq!(Budget::Absolute(40).resolve(17), 17);
    }

    #[test]
    fn sig9_rounding() {
        assert_eq!(round_sig9(1.0 / 3.0), 0.333333333);
        assert_eq!(round_sig9(123456789012.0), 123456789000.0);
        assert_eq!(round_sig9(0.0), 0.0);
    }
}
