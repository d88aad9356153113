//! Monthly series ingestion, small-trend decomposition and pairwise testing.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::dcov::PairedSample;
use crate::error::{Error, Result};
use crate::fgn::{FgnGenerator, HurstSpec};
use crate::rng::derive_seed;
use crate::subsampling::{independence_test, SubsamplingConfig, TestReport};

pub const PERIOD: usize = 12;

/// Consecutive monthly observations starting at `(start_year, start_month)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonthlySeries {
    values: Vec<f64>,
    start_year: i32,
    start_month: u32,
}

impl MonthlySeries {
    pub fn new(values: Vec<f64>, start_year: i32, start_month: u32) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        if !(1..=12).contains(&start_month) {
            return Err(Error::param("start_month", format!("must be 1..=12, got {start_month}")));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::param("values", "must be finite"));
        }
        Ok(MonthlySeries { values, start_year, start_month })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn start(&self) -> (i32, u32) {
        (self.start_year, self.start_month)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(year, month)` of observation `i`.
    pub fn date(&self, i: usize) -> (i32, u32) {
        let months = self.start_month as i64 - 1 + i as i64;
        (self.start_year + months.div_euclid(12) as i32, months.rem_euclid(12) as u32 + 1)
    }
}

fn next_month(year: i32, month: u32) -> (i32, u32) {
    if month == 12 {
        (year + 1, 1)
    } else {
        (year, month + 1)
    }
}

/// Reads a `year,month,value` CSV with strictly consecutive months.
pub fn read_monthly_csv<R: Read>(reader: R) -> Result<MonthlySeries> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::Csv { row: 1, reason: e.to_string() })?;
    let names: Vec<&str> = headers.iter().collect();
    if names != ["year", "month", "value"] {
        return Err(Error::Csv {
            row: 1,
            reason: format!("expected header `year,month,value`, got `{}`", names.join(",")),
        });
    }
    let mut values = Vec::new();
    let mut start = None;
    let mut prev: Option<(i32, u32)> = None;
    for record in rdr.records() {
        let record = record.map_err(|e| Error::Csv {
            row: e.position().map_or(0, |p| p.line() as usize),
            reason: e.to_string(),
        })?;
        let row = record.position().map_or(0, |p| p.line() as usize);
        let field = |i: usize, name: &str| -> Result<&str> {
            record.get(i).ok_or_else(|| Error::Csv { row, reason: format!("missing `{name}`") })
        };
        let year: i32 = field(0, "year")?
            .parse()
            .map_err(|_| Error::Csv { row, reason: format!("non-integer year `{}`", &record[0]) })?;
        let month: u32 = field(1, "month")?
            .parse()
            .map_err(|_| Error::Csv { row, reason: format!("non-integer month `{}`", &record[1]) })?;
        if !(1..=12).contains(&month) {
            return Err(Error::Csv { row, reason: format!("month {month} outside 1..=12") });
        }
        let raw = field(2, "value")?;
        let value: f64 = raw
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite())
            .ok_or_else(|| Error::Csv { row, reason: format!("non-numeric value `{raw}`") })?;
        if let Some((py, pm)) = prev {
            let (ey, em) = next_month(py, pm);
            if (year, month) != (ey, em) {
                return Err(Error::ChronologyGap { row, year, month, expected_year: ey, expected_month: em });
            }
        } else {
            start = Some((year, month));
        }
        prev = Some((year, month));
        values.push(value);
    }
    let (year, month) = start.ok_or(Error::Empty)?;
    MonthlySeries::new(values, year, month)
}

pub fn ingest_csv(path: impl AsRef<Path>) -> Result<MonthlySeries> {
    read_monthly_csv(std::fs::File::open(path)?)
}

pub fn write_monthly_csv<W: Write>(series: &MonthlySeries, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let io = |e: csv::Error| Error::Io(e.into());
    w.write_record(["year", "month", "value"]).map_err(io)?;
    for (i, v) in series.values().iter().enumerate() {
        let (y, m) = series.date(i);
        w.write_record([y.to_string(), m.to_string(), v.to_string()]).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// Output of [`small_trend_decompose`]. Cycles are counted from the first
/// observation, so `seasonal[k]` belongs to position `k` within a cycle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub trend: Vec<f64>,
    pub seasonal: Vec<f64>,
    pub residual: Vec<f64>,
}

impl Decomposition {
    pub fn reconstruct(&self) -> Vec<f64> {
        self.residual
            .iter()
            .enumerate()
            .map(|(i, r)| self.trend[i / PERIOD] + self.seasonal[i % PERIOD] + r)
            .collect()
    }
}

/// Yearly means as trend, averaged within-year deviations as seasonal
/// component, and the remainder as residual.
pub fn small_trend_decompose(series: &MonthlySeries) -> Result<Decomposition> {
    decompose_values(series.values())
}

pub fn decompose_values(x: &[f64]) -> Result<Decomposition> {
    let len = x.len();
    if !len.is_multiple_of(PERIOD) {
        return Err(Error::PartialCycle { len, period: PERIOD });
    }
    let years = len / PERIOD;
    if years < 2 {
        return Err(Error::SampleTooSmall { needed: 2 * PERIOD, got: len });
    }
    let trend: Vec<f64> = x.chunks(PERIOD).map(|c| c.iter().sum::<f64>() / PERIOD as f64).collect();
    let mut seasonal = vec![0.0; PERIOD];
    for (j, cycle) in x.chunks(PERIOD).enumerate() {
        for (k, v) in cycle.iter().enumerate() {
            seasonal[k] += v - trend[j];
        }
    }
    for s in &mut seasonal {
        *s /= years as f64;
    }
    // exact zero sum up to one rounding step
    let mean = seasonal.iter().sum::<f64>() / PERIOD as f64;
    for s in &mut seasonal {
        *s -= mean;
    }
    let residual = x
        .iter()
        .enumerate()
        .map(|(i, v)| v - trend[i / PERIOD] - seasonal[i % PERIOD])
        .collect();
    Ok(Decomposition { trend, seasonal, residual })
}

/// Symmetric matrix of test reports on the decomposition residuals; entry
/// `(i, j)` tests series `i` as `X` against series `j` as `Y` for `i < j`,
/// and `(j, i)` repeats it. The diagonal is empty.
pub fn pairwise_tests(series: &[MonthlySeries], cfg: &SubsamplingConfig) -> Result<Vec<Vec<Option<TestReport>>>> {
    let residuals: Vec<Vec<f64>> = series
        .iter()
        .map(|s| small_trend_decompose(s).map(|d| d.residual))
        .collect::<Result<_>>()?;
    if let Some(first) = residuals.first() {
        if let Some(r) = residuals.iter().find(|r| r.len() != first.len()) {
            return Err(Error::LengthMismatch { left: first.len(), right: r.len() });
        }
    }
    let k = residuals.len();
    let mut out = vec![vec![None; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let pair = PairedSample::new(residuals[i].clone(), residuals[j].clone())?;
            let report = independence_test(&pair, cfg)?;
            out[j][i] = Some(report.clone());
            out[i][j] = Some(report);
        }
    }
    Ok(out)
}

/// Tests two monthly series after decomposing each.
pub fn deseasonalized_test(x: &MonthlySeries, y: &MonthlySeries, cfg: &SubsamplingConfig) -> Result<TestReport> {
    let rx = small_trend_decompose(x)?.residual;
    let ry = small_trend_decompose(y)?.residual;
    independence_test(&PairedSample::new(rx, ry)?, cfg)
}

/// Length of the synthetic fixtures: eight years of monthly data.
pub const FIXTURE_LEN: usize = 96;
pub const FIXTURE_HURST: f64 = 0.7;
const FIXTURE_START: (i32, u32) = (2000, 1);
/// Scale of the independent noise added to the shared driver.
pub const TRIBUTARY_NOISE: f64 = 0.5;

fn discharge_like(z: &[f64], level: f64, amplitude: f64, scale: f64, phase: f64) -> Vec<f64> {
    z.iter()
        .enumerate()
        .map(|(i, v)| {
            let season = (2.0 * std::f64::consts::PI * (i as f64 / 12.0) + phase).sin();
            level + amplitude * season + scale * v
        })
        .collect()
}

fn fixture_generator() -> Result<FgnGenerator> {
    FgnGenerator::new(HurstSpec::new(FIXTURE_HURST, FIXTURE_LEN)?)
}

fn monthly(values: Vec<f64>) -> Result<MonthlySeries> {
    MonthlySeries::new(values, FIXTURE_START.0, FIXTURE_START.1)
}

/// Two independent FGN-driven series with seasonal cycles.
pub fn independent_proxy_pair(seed: u64) -> Result<(MonthlySeries, MonthlySeries)> {
    let g = fixture_generator()?;
    let a = g.sample(derive_seed(seed, 0));
    let b = g.sample(derive_seed(seed, 1));
    Ok((
        monthly(discharge_like(a.values(), 2200.0, 900.0, 250.0, 0.0))?,
        monthly(discharge_like(b.values(), 180_000.0, 60_000.0, 9_000.0, 2.0))?,
    ))
}

/// Two series sharing an FGN driver, each with independent FGN noise of
/// relative scale [`TRIBUTARY_NOISE`].
pub fn tributary_pair(seed: u64) -> Result<(MonthlySeries, MonthlySeries)> {
    let g = fixture_generator()?;
    let driver = g.sample(derive_seed(seed, 0));
    let mix = |noise: u64| -> Vec<f64> {
        let e = g.sample(derive_seed(seed, noise));
        driver.values().iter().zip(e.values()).map(|(d, e)| d + TRIBUTARY_NOISE * e).collect()
    };
    let (a, b) = (mix(1), mix(2));
    Ok((
        monthly(discharge_like(&a, 180_000.0, 60_000.0, 9_000.0, 2.0))?,
        monthly(discharge_like(&b, 1_500.0, 700.0, 120.0, 2.4))?,
    ))
}

/// Three stations: `a` and `b` share a driver, `c` is independent of both.
pub fn station_fixture(seed: u64) -> Result<Vec<(&'static str, MonthlySeries)>> {
    let (a, b) = tributary_pair(derive_seed(seed, 0))?;
    let (c, _) = independent_proxy_pair(derive_seed(seed, 1))?;
    Ok(vec![("station_a", a), ("station_b", b), ("station_c", c)])
}
