//! Dependence scenarios and rejection-rate experiments over the published
//! simulation grids.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dcov::PairedSample;
use crate::error::{Error, Result};
use crate::fgn::{FgnGenerator, HurstSpec};
use crate::reference::{self, TableValues, GAMMAS, HURSTS, SAMPLE_SIZES};
use crate::rng::derive_seed;
use crate::subordination::{
    transform_parabolic, transform_rotation, transform_uniform, transform_wavy, PARABOLIC_V2_MAX,
    WAVY_V2_MAX,
};
use crate::subsampling::{block_len_for, independence_test, Statistic, SubsamplingConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param", rename_all = "snake_case")]
pub enum ScenarioKind {
    /// Cross-correlated FGN pair, both mapped to `U[-1, 1]`.
    Linear(f64),
    /// `Y = v (X² − 1/3) + noise`.
    Parabolic(f64),
    /// `Y = v ((X² − 1/3)² − 3/45) + noise`.
    Wavy(f64),
    /// Two independent uniform series rotated by `πv/12`.
    Rectangular(f64),
}

impl ScenarioKind {
    pub fn param(&self) -> f64 {
        match *self {
            ScenarioKind::Linear(p)
            | ScenarioKind::Parabolic(p)
            | ScenarioKind::Wavy(p)
            | ScenarioKind::Rectangular(p) => p,
        }
    }

    fn validate(&self) -> Result<()> {
        let p = self.param();
        let ok = match self {
            ScenarioKind::Linear(r) => r.abs() <= 1.0,
            ScenarioKind::Parabolic(v) => v * v <= PARABOLIC_V2_MAX * (1.0 + 1e-12),
            ScenarioKind::Wavy(v) => v * v <= WAVY_V2_MAX * (1.0 + 1e-12),
            ScenarioKind::Rectangular(v) => v.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::param("param", format!("{p} is outside the admissible range for {self:?}")))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub kind: ScenarioKind,
    pub hurst: f64,
    pub n: usize,
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        HurstSpec::new(self.hurst, self.n)?;
        self.kind.validate()
    }
}

/// A scenario with its FGN generator built once for repeated draws.
#[derive(Debug, Clone)]
pub struct ScenarioSimulator {
    scenario: Scenario,
    generator: FgnGenerator,
}

impl ScenarioSimulator {
    pub fn new(scenario: Scenario) -> Result<Self> {
        scenario.validate()?;
        let generator = FgnGenerator::new(HurstSpec::new(scenario.hurst, scenario.n)?)?;
        Ok(ScenarioSimulator { scenario, generator })
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    /// Sub-seeds 0 and 1 drive the FGN draws, 2 the additive noise.
    pub fn simulate(&self, seed: u64) -> Result<PairedSample> {
        let g = &self.generator;
        let (x, y) = match self.scenario.kind {
            ScenarioKind::Linear(r) => {
                let (z, z2) = g.sample_pair(r, seed)?;
                (transform_uniform(&z), transform_uniform(&z2))
            }
            ScenarioKind::Parabolic(v) => {
                let x = transform_uniform(&g.sample(derive_seed(seed, 0)));
                let y = transform_parabolic(&x, v, derive_seed(seed, 2))?;
                (x, y)
            }
            ScenarioKind::Wavy(v) => {
                let x = transform_uniform(&g.sample(derive_seed(seed, 0)));
                let y = transform_wavy(&x, v, derive_seed(seed, 2))?;
                (x, y)
            }
            ScenarioKind::Rectangular(v) => {
                let xi = transform_uniform(&g.sample(derive_seed(seed, 0)));
                let eta = transform_uniform(&g.sample(derive_seed(seed, 1)));
                transform_rotation(&xi, &eta, v)?
            }
        };
        PairedSample::from_series(&x, &y)
    }
}

pub fn simulate_scenario(scenario: Scenario, seed: u64) -> Result<PairedSample> {
    ScenarioSimulator::new(scenario)?.simulate(seed)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub scenario: Scenario,
    pub config: SubsamplingConfig,
    pub replications: usize,
    pub rejections: usize,
    pub rejection_rate: f64,
    pub wall_time_secs: f64,
    pub master_seed: u64,
}

/// Fraction of `reps` replications in which the test rejects. Replication
/// `i` uses the seed `derive_seed(master_seed, i)`, so the result does not
/// depend on the thread count.
pub fn rejection_rate(
    scenario: Scenario,
    config: &SubsamplingConfig,
    reps: usize,
    master_seed: u64,
) -> Result<ExperimentResult> {
    if reps == 0 {
        return Err(Error::param("reps", "must be at least 1"));
    }
    config.validate()?;
    config.block_count(scenario.n)?;
    let start = Instant::now();
    let sim = ScenarioSimulator::new(scenario)?;
    let outcomes: Vec<bool> = (0..reps as u64)
        .into_par_iter()
        .map(|i| {
            let sample = sim.simulate(derive_seed(master_seed, i))?;
            Ok(independence_test(&sample, config)?.reject)
        })
        .collect::<Result<_>>()?;
    let rejections = outcomes.iter().filter(|&&r| r).count();
    Ok(ExperimentResult {
        scenario,
        config: *config,
        replications: reps,
        rejections,
        rejection_rate: rejections as f64 / reps as f64,
        wall_time_secs: start.elapsed().as_secs_f64(),
        master_seed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioFamily {
    Linear,
    Parabolic,
    Wavy,
    Rectangular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatisticFamily {
    Dcov,
    Pearson,
}

/// One of the eight published grids.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableSpec {
    pub id: u8,
    pub family: ScenarioFamily,
    pub statistic: StatisticFamily,
    pub params: [f64; 3],
    values: &'static TableValues,
}

pub fn table_spec(id: u8) -> Result<TableSpec> {
    use ScenarioFamily::*;
    use StatisticFamily::*;
    let (family, statistic, params, values) = match id {
        1 => (Linear, Dcov, [0.0, 0.25, 0.5], &reference::TABLE_1),
        2 => (Linear, Pearson, [0.0, 0.25, 0.5], &reference::TABLE_2),
        3 => (Parabolic, Dcov, [0.5, 1.0, 1.5], &reference::TABLE_3),
        4 => (Parabolic, Pearson, [0.5, 0.75, 1.0], &reference::TABLE_4),
        5 => (Wavy, Dcov, [2.0, 3.0, 4.0], &reference::TABLE_5),
        6 => (Wavy, Pearson, [2.0, 3.0, 4.0], &reference::TABLE_6),
        7 => (Rectangular, Dcov, [1.0, 2.0, 3.0], &reference::TABLE_7),
        8 => (Rectangular, Pearson, [1.0, 2.0, 3.0], &reference::TABLE_8),
        _ => return Err(Error::param("table", format!("must be 1..=8, got {id}"))),
    };
    Ok(TableSpec { id, family, statistic, params, values })
}

fn index_of(grid: &[f64], value: f64) -> Option<usize> {
    grid.iter().position(|g| (g - value).abs() < 1e-9)
}

impl TableSpec {
    pub fn scenario(&self, n: usize, hurst: f64, param: f64) -> Scenario {
        let kind = match self.family {
            ScenarioFamily::Linear => ScenarioKind::Linear(param),
            ScenarioFamily::Parabolic => ScenarioKind::Parabolic(param),
            ScenarioFamily::Wavy => ScenarioKind::Wavy(param),
            ScenarioFamily::Rectangular => ScenarioKind::Rectangular(param),
        };
        Scenario { kind, hurst, n }
    }

    /// Pearson tables use `n^{-1/2}|Σ…|`; distance-covariance tables pick the
    /// normalization from `D = 2 − 2H`: `√n` above 1/2, `n^D` below.
    pub fn statistic_for(&self, hurst: f64) -> Result<Statistic> {
        match self.statistic {
            StatisticFamily::Pearson => Ok(Statistic::PearsonAbsCov),
            StatisticFamily::Dcov => {
                let d = 2.0 - 2.0 * hurst;
                if (d - 0.5).abs() < 1e-12 {
                    Err(Error::param("hurst", "D = 1/2 has no single-regime normalization"))
                } else if d > 0.5 {
                    Ok(Statistic::DcovSqrtN)
                } else {
                    Ok(Statistic::DcovNPowD(d))
                }
            }
        }
    }

    /// Published value, if the cell is on the grid. Values above 1 are
    /// misprints and come back as `None`.
    pub fn published_value(&self, gamma: f64, n: usize, hurst: f64, param: f64) -> Option<f64> {
        let raw = self.raw_published_value(gamma, n, hurst, param)?;
        (raw <= 1.0).then_some(raw)
    }

    fn raw_published_value(&self, gamma: f64, n: usize, hurst: f64, param: f64) -> Option<f64> {
        let g = index_of(&GAMMAS, gamma)?;
        let i = SAMPLE_SIZES.iter().position(|&s| s == n)?;
        let h = index_of(&HURSTS, hurst)?;
        let p = index_of(&self.params, param)?;
        Some(self.values[g][i][h * 3 + p])
    }

    pub fn is_flagged(&self, gamma: f64, n: usize, hurst: f64, param: f64) -> bool {
        self.raw_published_value(gamma, n, hurst, param).is_some_and(|v| v > 1.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableCell {
    pub n: usize,
    pub hurst: f64,
    pub param: f64,
    pub result: ExperimentResult,
    pub published: Option<f64>,
    /// The published value is a misprint and excluded from comparison.
    pub flagged: bool,
}

impl TableCell {
    pub fn abs_diff(&self) -> Option<f64> {
        self.published.map(|p| (self.result.rejection_rate - p).abs())
    }
}

/// Runs every `(n, H, parameter)` cell of a published table with
/// `l = ⌊n^γ⌋`, `d = ⌊0.1 n⌋` and `α = 0.05`.
pub fn reproduce_table(table_id: u8, reps: usize, gamma: f64, master_seed: u64) -> Result<Vec<TableCell>> {
    let spec = table_spec(table_id)?;
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::param("gamma", format!("must lie in (0, 1), got {gamma}")));
    }
    let table_seed = derive_seed(master_seed, u64::from(table_id));
    let mut cells = Vec::with_capacity(48);
    for (i, &n) in SAMPLE_SIZES.iter().enumerate() {
        for (h, &hurst) in HURSTS.iter().enumerate() {
            for (p, &param) in spec.params.iter().enumerate() {
                let statistic = spec.statistic_for(hurst)?;
                let config = SubsamplingConfig {
                    block_len: block_len_for(n, gamma).max(1),
                    lag: n / 10,
                    statistic,
                    alpha: 0.05,
                };
                let cell_seed = derive_seed(table_seed, (i * 12 + h * 3 + p) as u64);
                let result = rejection_rate(spec.scenario(n, hurst, param), &config, reps, cell_seed)?;
                cells.push(TableCell {
                    n,
                    hurst,
                    param,
                    result,
                    published: spec.published_value(gamma, n, hurst, param),
                    flagged: spec.is_flagged(gamma, n, hurst, param),
                });
            }
        }
    }
    Ok(cells)
}
