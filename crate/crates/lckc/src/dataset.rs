//! CSV dataset ingestion: column selection, time filtering, geo conversion,
//! normalization and temporal slicing.

use std::fs::File;
use std::path::PathBuf;
use std::str::FromStr;

use chrono::{DateTime, NaiveDate, NaiveDateTime};
use lckc_core::PointSet;
use serde::{Deserialize, Serialize};

use crate::error::{config, Error, Result};

/// Earth radius in kilometres used for latitude/longitude conversion.
pub const EARTH_RADIUS_KM: f64 = 6371.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    #[default]
    None,
    Zscore,
    Minmax,
}

impl FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Normalization::None),
            "zscore" => Ok(Normalization::Zscore),
            "minmax" => Ok(Normalization::Minmax),
            _ => Err(config(format!("unknown normalization `{s}` (want none, zscore or minmax)"))),
        }
    }
}

impl Normalization {
    pub fn name(self) -> &'static str {
        match self {
            Normalization::None => "none",
            Normalization::Zscore => "zscore",
            Normalization::Minmax => "minmax",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    Abalone,
    Electric,
    Onlineretail,
    Twitter,
    Uber,
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Preset::Abalone, Preset::Electric, Preset::Onlineretail, Preset::Twitter, Preset::Uber]
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| config(format!("unknown preset `{s}`")))
    }
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Abalone => "abalone",
            Preset::Electric => "electric",
            Preset::Onlineretail => "onlineretail",
            Preset::Twitter => "twitter",
            Preset::Uber => "uber",
        }
    }
}

/// Half-open time window `[start, end)`. Bounds are ISO-8601 dates or
/// datetimes, or epoch seconds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimeRange {
    pub start: String,
    pub end: String,
}

impl TimeRange {
    fn new(start: &str, end: &str) -> Self {
        TimeRange { start: start.to_owned(), end: end.to_owned() }
    }

    fn bounds(&self) -> Result<(i64, i64)> {
        let parse = |s: &str| parse_auto(s).ok_or_else(|| config(format!("bad time bound `{s}`")));
        Ok((parse(&self.start)?, parse(&self.end)?))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetConfig {
    pub path: PathBuf,
    #[serde(default = "default_delimiter")]
    pub delimiter: char,
    #[serde(default = "default_true")]
    pub has_header: bool,
    /// Column names, or zero-based indices when no header column has that name.
    #[serde(default)]
    pub feature_columns: Vec<String>,
    /// A column name, or several joined with `+` whose values are concatenated
    /// with a space before parsing (e.g. `Date+Time`).
    #[serde(default)]
    pub timestamp_column: Option<String>,
    /// chrono format string; when absent timestamps are auto-detected as epoch
    /// seconds or ISO-8601.
    #[serde(default)]
    pub timestamp_format: Option<String>,
    #[serde(default)]
    pub row_filter: Option<TimeRange>,
    #[serde(default)]
    pub normalization: Normalization,
    #[serde(default)]
    pub max_rows: Option<usize>,
    #[serde(default)]
    pub preset: Option<Preset>,
    /// Treat the two feature columns as latitude and longitude in degrees and
    /// emit 3D Cartesian coordinates in kilometres.
    #[serde(default)]
    pub geo_cartesian: bool,
    /// Drop rows with unparsable cells instead of failing.
    #[serde(default)]
    pub skip_invalid: bool,
}

fn default_delimiter() -> char {
    ','
}

fn default_true() -> bool {
    true
}

impl DatasetConfig {
    pub fn new(path: impl Into<PathBuf>, feature_columns: &[&str]) -> Self {
        DatasetConfig {
            path: path.into(),
            delimiter: ',',
            has_header: true,
            feature_columns: feature_columns.iter().map(|s| s.to_string()).collect(),
            timestamp_column: None,
            timestamp_format: None,
            row_filter: None,
            normalization: Normalization::None,
            max_rows: None,
            preset: None,
            geo_cartesian: false,
            skip_invalid: false,
        }
    }

    /// The recipe for one of the bundled datasets.
    pub fn preset(preset: Preset, path: impl Into<PathBuf>) -> Self {
        let mut cfg = DatasetConfig::new(path, &[]);
        cfg.preset = Some(preset);
        cfg.with_preset_defaults()
    }

    /// Fills every field still at its default value from the preset recipe.
    pub fn with_preset_defaults(mut self) -> Self {
        let Some(preset) = self.preset else { return self };
        let recipe = Recipe::of(preset);
        if self.delimiter == ',' {
            self.delimiter = recipe.delimiter;
        }
        if self.feature_columns.is_empty() {
            self.feature_columns = recipe.features.iter().map(|s| s.to_string()).collect();
        }
        if self.timestamp_column.is_none() {
            self.timestamp_column = recipe.timestamp.map(str::to_owned);
        }
        if self.timestamp_format.is_none() {
            self.timestamp_format = recipe.format.map(str::to_owned);
        }
        if self.row_filter.is_none() {
            self.row_filter = recipe.window.map(|(a, b)| TimeRange::new(a, b));
        }
        self.geo_cartesian |= recipe.geo;
        self.skip_invalid |= recipe.skip_invalid;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.feature_columns.is_empty() {
            return Err(config("feature_columns is empty"));
        }
        if self.row_filter.is_some() && self.timestamp_column.is_none() {
            return Err(config("row_filter needs timestamp_column"));
        }
        if self.geo_cartesian && self.feature_columns.len() != 2 {
            return Err(config("geo_cartesian needs exactly two feature columns (latitude, longitude)"));
        }
        if !self.delimiter.is_ascii() {
            return Err(config("delimiter must be a single ASCII character"));
        }
        Ok(())
    }

    /// Short label used for the `dataset` column of result files.
    pub fn dataset_name(&self) -> String {
        match self.preset {
            Some(p) => p.name().to_owned(),
            None => self.path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
        }
    }
}

struct Recipe {
    delimiter: char,
    features: &'static [&'static str],
    timestamp: Option<&'static str>,
    format: Option<&'static str>,
    window: Option<(&'static str, &'static str)>,
    geo: bool,
    skip_invalid: bool,
}

impl Recipe {
    fn of(preset: Preset) -> Recipe {
        match preset {
            // abalone.data has no header line; reading its first row as one
            // leaves 4176 entries. Columns 0 and 8 are sex and rings.
            Preset::Abalone => Recipe {
                delimiter: ',',
                features: &["1", "2", "3", "4", "5", "6", "7"],
                timestamp: None,
                format: None,
                window: None,
                geo: false,
                skip_invalid: false,
            },
            Preset::Electric => Recipe {
                delimiter: ';',
                features: &[
                    "Global_active_power",
                    "Global_reactive_power",
                    "Voltage",
                    "Global_intensity",
                    "Sub_metering_1",
                    "Sub_metering_2",
                    "Sub_metering_3",
                ],
                timestamp: Some("Date+Time"),
                format: Some("%d/%m/%Y %H:%M:%S"),
                window: Some(("2006-12-01", "2008-08-01")),
                geo: false,
                skip_invalid: true,
            },
            Preset::Onlineretail => Recipe {
                delimiter: ',',
                features: &["Quantity", "UnitPrice"],
                timestamp: Some("InvoiceDate"),
                format: Some("%m/%d/%Y %H:%M"),
                window: Some(("2011-01-01", "2011-01-21")),
                geo: false,
                skip_invalid: false,
            },
            Preset::Twitter => Recipe {
                delimiter: ',',
                features: &["latitude", "longitude"],
                timestamp: Some("timestamp"),
                format: None,
                window: Some(("2013-01-12T00:00:00", "2013-01-12T20:00:00")),
                geo: true,
                skip_invalid: true,
            },
            Preset::Uber => Recipe {
                delimiter: ',',
                features: &["Lat", "Lon"],
                timestamp: Some("Date/Time"),
                format: Some("%m/%d/%Y %H:%M:%S"),
                window: Some(("2014-06-01", "2014-06-21")),
                geo: true,
                skip_invalid: false,
            },
        }
    }
}

/// A loaded dataset. `timestamps[i]` (epoch seconds) belongs to point `i`.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub points: PointSet,
    pub timestamps: Option<Vec<i64>>,
    /// Rows dropped because a cell did not parse.
    pub skipped: usize,
}

fn resolve_column(name: &str, header: Option<&csv::StringRecord>, width: usize) -> Result<usize> {
    if let Some(h) = header {
        if let Some(i) = h.iter().position(|c| c.trim() == name) {
            return Ok(i);
        }
    }
    match name.parse::<usize>() {
        Ok(i) if i < width => Ok(i),
        _ => Err(Error::MissingColumn(name.to_owned())),
    }
}

fn parse_auto(s: &str) -> Option<i64> {
    let s = s.trim();
    if let Ok(v) = s.parse::<i64>() {
        return Some(v);
    }
    if let Ok(v) = s.parse::<f64>() {
        return v.is_finite().then(|| v.floor() as i64);
    }
    if let Ok(t) = DateTime::parse_from_rfc3339(s) {
        return Some(t.timestamp());
    }
    for fmt in ["%Y-%m-%dT%H:%M:%S%.f", "%Y-%m-%d %H:%M:%S%.f", "%Y-%m-%dT%H:%M", "%Y-%m-%d %H:%M"] {
        if let Ok(t) = NaiveDateTime::parse_from_str(s, fmt) {
            return Some(t.and_utc().timestamp());
        }
    }
    NaiveDate::parse_from_str(s, "%Y-%m-%d").ok().map(|d| d.and_hms_opt(0, 0, 0).unwrap().and_utc().timestamp())
}

fn parse_with(s: &str, fmt: &str) -> Option<i64> {
    let s = s.trim();
    if let Ok(t) = NaiveDateTime::parse_from_str(s, fmt) {
        return Some(t.and_utc().timestamp());
    }
    NaiveDate::parse_from_str(s, fmt).ok().map(|d| d.and_hms_opt(0, 0, 0).unwrap().and_utc().timestamp())
}

fn geo_to_cartesian(lat_deg: f64, lon_deg: f64) -> [f64; 3] {
    let (lat, lon) = (lat_deg.to_radians(), lon_deg.to_radians());
    [
        EARTH_RADIUS_KM * lat.cos() * lon.cos(),
        EARTH_RADIUS_KM * lat.cos() * lon.sin(),
        EARTH_RADIUS_KM * lat.sin(),
    ]
}

/// Loads `cfg.path` into a point set. Rows keep their file order.
pub fn load(cfg: &DatasetConfig) -> Result<Loaded> {
    let cfg = cfg.clone().with_preset_defaults();
    cfg.validate()?;
    let file = File::open(&cfg.path).map_err(|e| Error::io(&cfg.path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(cfg.delimiter as u8)
        .has_headers(cfg.has_header)
        .flexible(true)
        .from_reader(file);

    let header = if cfg.has_header { Some(reader.headers()?.clone()) } else { None };
    let mut records = reader.records();
    let first = match records.next() {
        Some(r) => Some(r?),
        None => None,
    };
    let width = first.as_ref().map(|r| r.len()).or(header.as_ref().map(|h| h.len())).unwrap_or(0);

    let features = cfg
        .feature_columns
        .iter()
        .map(|c| resolve_column(c, header.as_ref(), width))
        .collect::<Result<Vec<_>>>()?;
    let stamp_cols = match &cfg.timestamp_column {
        Some(spec) => Some(spec.split('+').map(|c| resolve_column(c.trim(), header.as_ref(), width)).collect::<Result<Vec<_>>>()?),
        None => None,
    };
    let window = cfg.row_filter.as_ref().map(TimeRange::bounds).transpose()?;

    let mut rows: Vec<f64> = Vec::new();
    let mut stamps: Vec<i64> = Vec::new();
    let mut skipped = 0;
    let mut n = 0;
    let mut buf = String::new();
    let mut values = Vec::with_capacity(features.len());

    for record in first.into_iter().map(Ok).chain(records) {
        if cfg.max_rows.is_some_and(|m| n >= m) {
            break;
        }
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());

        let stamp = match &stamp_cols {
            Some(cols) => {
                buf.clear();
                for (j, &c) in cols.iter().enumerate() {
                    if j > 0 {
                        buf.push(' ');
                    }
                    buf.push_str(record.get(c).unwrap_or(""));
                }
                let parsed = match &cfg.timestamp_format {
                    Some(fmt) => parse_with(&buf, fmt),
                    None => parse_auto(&buf),
                };
                match parsed {
                    Some(t) => Some(t),
                    None if cfg.skip_invalid => {
                        skipped += 1;
                        continue;
                    }
                    None => return Err(Error::Row { line, message: format!("unparsable timestamp `{buf}`") }),
                }
            }
            None => None,
        };
        if let (Some((lo, hi)), Some(t)) = (window, stamp) {
            if t < lo || t >= hi {
                continue;
            }
        }

        values.clear();
        let mut bad = None;
        for (&c, name) in features.iter().zip(&cfg.feature_columns) {
            let cell = record.get(c).unwrap_or("").trim();
            match cell.parse::<f64>() {
                Ok(v) if v.is_finite() => values.push(v),
                _ => {
                    bad = Some(format!("non-numeric value `{cell}` in column `{name}`"));
                    break;
                }
            }
        }
        if let Some(message) = bad {
            if cfg.skip_invalid {
                skipped += 1;
                continue;
            }
            return Err(Error::Row { line, message });
        }

        if cfg.geo_cartesian {
            rows.extend_from_slice(&geo_to_cartesian(values[0], values[1]));
        } else {
            rows.extend_from_slice(&values);
        }
        if let Some(t) = stamp {
            stamps.push(t);
        }
        n += 1;
    }

    if n == 0 {
        return Err(Error::Empty(cfg.path.clone()));
    }
    if skipped > 0 {
        log::warn!("{}: skipped {skipped} rows with unparsable cells", cfg.path.display());
    }
    let dim = rows.len() / n;
    normalize(&mut rows, dim, cfg.normalization);
    Ok(Loaded {
        points: PointSet::new(dim, rows)?,
        timestamps: stamp_cols.map(|_| stamps),
        skipped,
    })
}

/// Normalizes each column of a row-major matrix in place. Constant columns
/// become zeros.
pub fn normalize(rows: &mut [f64], dim: usize, how: Normalization) {
    if how == Normalization::None || dim == 0 || rows.is_empty() {
        return;
    }
    let n = rows.len() / dim;
    for j in 0..dim {
        let col = || (0..n).map(|i| i * dim + j);
        match how {
            Normalization::Zscore => {
                let mean = col().map(|i| rows[i]).sum::<f64>() / n as f64;
                let var = col().map(|i| (rows[i] - mean).powi(2)).sum::<f64>() / n as f64;
                let sd = var.sqrt();
                for i in col() {
                    rows[i] = if sd > 0.0 { (rows[i] - mean) / sd } else { 0.0 };
                }
            }
            Normalization::Minmax => {
                let lo = col().map(|i| rows[i]).fold(f64::INFINITY, f64::min);
                let hi = col().map(|i| rows[i]).fold(f64::NEG_INFINITY, f64::max);
                for i in col() {
                    rows[i] = if hi > lo { (rows[i] - lo) / (hi - lo) } else { 0.0 };
                }
            }
            Normalization::None => unreachable!(),
        }
    }
}

/// Orders points by timestamp (stable) and cuts them into `t` contiguous
/// slices of `n / t` points; the remainder goes to the last slice.
pub fn slice_temporal(ps: &PointSet, timestamps: &[i64], t: usize) -> Result<Vec<PointSet>> {
    let n = ps.len();
    if timestamps.len() != n {
        return Err(config(format!("{} timestamps for {n} points", timestamps.len())));
    }
    if t == 0 || t > n {
        return Err(config(format!("cannot cut {n} points into {t} slices")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| timestamps[i]);
    let size = n / t;
    Ok((0..t)
        .map(|s| {
            let end = if s + 1 == t { n } else { (s + 1) * size };
            ps.select(&order[s * size..end])
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn csv_file(body: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(body.as_bytes()).unwrap();
        f
    }

    #[test]
    fn two_rows_pass_through() {
        let f = csv_file("a,b\n0,0\n3,4\n");
        let got = load(&DatasetConfig::new(f.path(), &["a", "b"])).unwrap();
        assert_eq!(got.points.len(), 2);
        assert_eq!(got.points.dim(), 2);
        assert_eq!(got.points.point(1), &[3.0, 4.0]);
        assert!(got.timestamps.is_none());
    }

    #[test]
    fn minmax_of_constant_column_is_zero() {
        let f = csv_file("a,b\n5,1\n5,2\n5,3\n");
        let mut cfg = DatasetConfig::new(f.path(), &["a", "b"]);
        cfg.normalization = Normalization::Minmax;
        let got = load(&cfg).unwrap();
        assert_eq!(got.points.as_flat(), &[0.0, 0.0, 0.0, 0.5, 0.0, 1.0]);
    }

    #[test]
    fn zscore_columns_are_standardized() {
        let mut rows = vec![1.0, 10.0, 2.0, 10.0, 3.0, 10.0, 10.0, 10.0];
        normalize(&mut rows, 2, Normalization::Zscore);
        let col: Vec<f64> = rows.iter().step_by(2).copied().collect();
        let mean = col.iter().sum::<f64>() / 4.0;
        let sd = (col.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / 4.0).sqrt();
        assert!(mean.abs() < 1e-9 && (sd - 1.0).abs() < 1e-9);
        assert!(rows.iter().skip(1).step_by(2).all(|&v| v == 0.0));
    }

    #[test]
    fn missing_column_is_named() {
        let f = csv_file("a,b\n1,2\n");
        let err = load(&DatasetConfig::new(f.path(), &["a", "zz"])).unwrap_err();
        assert!(matches!(err, Error::MissingColumn(ref c) if c == "zz"), "{err}");
    }

    #[test]
    fn bad_cell_reports_its_line() {
        let f = csv_file("a,b\n1,2\n3,x\n");
        let err = load(&DatasetConfig::new(f.path(), &["a", "b"])).unwrap_err();
        assert!(matches!(err, Error::Row { line: 3, .. }), "{err}");

        let mut cfg = DatasetConfig::new(f.path(), &["a", "b"]);
        cfg.skip_invalid = true;
        let got = load(&cfg).unwrap();
        assert_eq!((got.points.len(), got.skipped), (1, 1));
    }

    #[test]
    fn empty_result_is_an_error() {
        let f = csv_file("a,t\n1,2020-01-01\n");
        let mut cfg = DatasetConfig::new(f.path(), &["a"]);
        cfg.timestamp_column = Some("t".into());
        cfg.row_filter = Some(TimeRange::new("2021-01-01", "2022-01-01"));
        assert!(matches!(load(&cfg), Err(Error::Empty(_))));
    }

    #[test]
    fn window_and_split_timestamp_columns() {
        let f = csv_file("d;h;v\n31/12/2010;23:59:59;1\n01/01/2011;00:00:00;2\n02/01/2011;12:00:00;3\n05/01/2011;00:00:00;4\n");
        let mut cfg = DatasetConfig::new(f.path(), &["v"]);
        cfg.delimiter = ';';
        cfg.timestamp_column = Some("d+h".into());
        cfg.timestamp_format = Some("%d/%m/%Y %H:%M:%S".into());
        cfg.row_filter = Some(TimeRange::new("2011-01-01", "2011-01-05"));
        let got = load(&cfg).unwrap();
        assert_eq!(got.points.as_flat(), &[2.0, 3.0]);
        assert_eq!(got.timestamps.unwrap(), vec![1293840000, 1293969600]);
    }

    #[test]
    fn timestamps_auto_detect() {
        assert_eq!(parse_auto("86400"), Some(86400));
        assert_eq!(parse_auto("1970-01-02"), Some(86400));
        assert_eq!(parse_auto("1970-01-02T00:01:00"), Some(86460));
        assert_eq!(parse_auto("1970-01-02 00:01"), Some(86460));
        assert_eq!(parse_auto("1970-01-02T01:00:00+01:00"), Some(86400));
        assert_eq!(parse_auto("yesterday"), None);
    }

    #[test]
    fn indices_address_headerless_files() {
        let f = csv_file("M,1,2,9\nF,3,4,9\n");
        let mut cfg = DatasetConfig::new(f.path(), &["1", "2"]);
        cfg.has_header = false;
        assert_eq!(load(&cfg).unwrap().points.len(), 2);
        cfg.has_header = true;
        assert_eq!(load(&cfg).unwrap().points.as_flat(), &[3.0, 4.0]);
    }

    #[test]
    fn abalone_recipe_drops_sex_and_rings() {
        let f = csv_file("M,0.455,0.365,0.095,0.514,0.2245,0.101,0.15,15\nM,0.35,0.265,0.09,0.2255,0.0995,0.0485,0.07,7\nF,0.53,0.42,0.135,0.677,0.2565,0.1415,0.21,9\n");
        let got = load(&DatasetConfig::preset(Preset::Abalone, f.path())).unwrap();
        assert_eq!((got.points.len(), got.points.dim()), (2, 7));
        assert_eq!(got.points.point(1)[0], 0.53);
    }

    #[test]
    fn geo_points_land_on_the_sphere() {
        let f = csv_file("Date/Time,Lat,Lon,Base\n6/1/2014 0:00:00,40.7,-74.0,B\n5/31/2014 23:59:00,40.7,-74.0,B\n6/21/2014 0:00:00,0,0,B\n6/2/2014 0:00:00,0,90,B\n");
        let got = load(&DatasetConfig::preset(Preset::Uber, f.path())).unwrap();
        assert_eq!((got.points.len(), got.points.dim()), (2, 3));
        let p = got.points.point(0);
        let r = p.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((r - EARTH_RADIUS_KM).abs() < 1e-6);
        let q = got.points.point(1);
        assert!(q[0].abs() < 1e-9 && (q[1] - EARTH_RADIUS_KM).abs() < 1e-9 && q[2].abs() < 1e-9);
    }

    #[test]
    fn slices_follow_time_order() {
        let ps = PointSet::from_line(&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0]).unwrap();
        let stamps = [9, 8, 7, 6, 5, 4, 3, 2, 1, 0];
        let five = slice_temporal(&ps, &stamps, 5).unwrap();
        assert!(five.iter().all(|s| s.len() == 2));
        assert_eq!(five[0].as_flat(), &[9.0, 8.0]);
        let sizes: Vec<usize> = slice_temporal(&ps, &stamps, 3).unwrap().iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![3, 3, 4]);
        assert_eq!(slice_temporal(&ps, &stamps, 1).unwrap()[0].len(), 10);
        assert!(slice_temporal(&ps, &stamps, 11).is_err());
        assert!(slice_temporal(&ps, &stamps, 0).is_err());
    }

    #[test]
    fn equal_timestamps_keep_file_order() {
        let ps = PointSet::from_line(&[0.0, 1.0, 2.0, 3.0]).unwrap();
        let got = slice_temporal(&ps, &[1, 0, 1, 0], 2).unwrap();
        assert_eq!(got[0].as_flat(), &[1.0, 3.0]);
        assert_eq!(got[1].as_flat(), &[0.0, 2.0]);
    }
}
