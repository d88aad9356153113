//! Distance-covariance independence testing for long-range dependent series.
//!
//! Fractional Gaussian noise generation, Hermite subordination, distance and
//! product-moment covariance statistics, their limit parameters, a
//! subsampling test, Monte Carlo drivers and a small data pipeline.

pub mod asymptotics;
pub mod dcov;
pub mod error;
pub mod fgn;
pub mod montecarlo;
pub mod pipeline;
pub mod quadrature;
pub mod reference;
pub mod rng;
pub mod special;
pub mod subordination;
pub mod subsampling;

pub use dcov::{Normalization, PairedSample};
pub use error::{Error, Result};
pub use fgn::{FgnGenerator, HurstSpec, TimeSeries};
pub use montecarlo::{Scenario, ScenarioKind};
pub use subsampling::{independence_test, Statistic, SubsamplingConfig, TestReport};
