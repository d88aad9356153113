//! Fractional Gaussian noise by circulant embedding.
//!
//! The `n × n` Toeplitz covariance `ρ(|i-j|)` is embedded in a `2n × 2n`
//! circulant matrix whose eigenvalues are obtained with one FFT. A sample is
//! the real part of the FFT of `sqrt(λ_k / 2n) (ξ_k + i ζ_k)`, which has
//! exactly the target covariance.

use std::sync::Arc;

use num_complex::Complex64;
use rand_distr::{Distribution, StandardNormal};
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::{derive_seed, stream};

/// Eigenvalues of the embedding below `-EIGEN_TOLERANCE` abort generation;
/// values in `[-EIGEN_TOLERANCE, 0)` are clamped to zero.
pub const EIGEN_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HurstSpec {
    pub hurst: f64,
    pub length: usize,
}

impl HurstSpec {
    pub fn new(hurst: f64, length: usize) -> Result<Self> {
        let spec = Self { hurst, length };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.hurst > 0.0 && self.hurst < 1.0) {
            return Err(Error::param("hurst", format!("must lie in (0, 1), got {}", self.hurst)));
        }
        if self.length < 2 {
            return Err(Error::param("length", format!("must be at least 2, got {}", self.length)));
        }
        Ok(())
    }

    /// Long-range dependence parameter `D = 2 - 2H`.
    pub fn lrd_param(&self) -> f64 {
        2.0 - 2.0 * self.hurst
    }

    /// `D ∈ (0, 1)`, i.e. `H ∈ (1/2, 1)`.
    pub fn is_long_range(&self) -> bool {
        self.hurst > 0.5
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesMeta {
    pub spec: HurstSpec,
    pub seed: u64,
}

/// A single real-valued sample path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    values: Vec<f64>,
    meta: Option<SeriesMeta>,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::param("values", format!("non-finite entry at index {i}")));
        }
        Ok(Self { values, meta: None })
    }

    pub(crate) fn from_finite(values: Vec<f64>, meta: Option<SeriesMeta>) -> Self {
        debug_assert!(values.iter().all(|v| v.is_finite()));
        Self { values, meta }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn meta(&self) -> Option<&SeriesMeta> {
        self.meta.as_ref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Autocovariance of unit-variance FGN at lag `k`:
/// `½(|k+1|^{2H} − 2|k|^{2H} + |k−1|^{2H})`.
pub fn fgn_autocov(k: u64, hurst: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let two_h = 2.0 * hurst;
    let k = k as f64;
    0.5 * ((k + 1.0).powf(two_h) - 2.0 * k.powf(two_h) + (k - 1.0).powf(two_h))
}

/// Reusable generator for one `HurstSpec`: holds the square-rooted,
/// pre-scaled circulant eigenvalues and the FFT plan.
#[derive(Clone)]
pub struct FgnGenerator {
    spec: HurstSpec,
    scaled_sqrt_eigen: Arc<Vec<f64>>,
    fft: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for FgnGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FgnGenerator").field("spec", &self.spec).finish()
    }
}

impl FgnGenerator {
    pub fn new(spec: HurstSpec) -> Result<Self> {
        spec.validate()?;
        let eigen = circulant_eigenvalues(spec)?;
        let m = eigen.len() as f64;
        let scaled_sqrt_eigen = eigen.iter().map(|l| (l / m).sqrt()).collect();
        let fft = FftPlanner::new().plan_fft_forward(eigen.len());
        Ok(Self {
            spec,
            scaled_sqrt_eigen: Arc::new(scaled_sqrt_eigen),
            fft,
        })
    }

    pub fn spec(&self) -> HurstSpec {
        self.spec
    }

    pub fn sample(&self, seed: u64) -> TimeSeries {
        let mut rng = stream(seed);
        let mut buf: Vec<Complex64> = self
            .scaled_sqrt_eigen
            .iter()
            .map(|a| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                Complex64::new(a * re, a * im)
            })
            .collect();
        self.fft.process(&mut buf);
        let values = buf[..self.spec.length].iter().map(|c| c.re).collect();
        TimeSeries::from_finite(values, Some(SeriesMeta { spec: self.spec, seed }))
    }

    /// Pair `(Z, Z̃)` with `Z̃ = r Z + sqrt(1 − r²) Z'`, `Z'` independent of
    /// `Z`. Both marginals are FGN and `Cov(Z_i, Z̃_j) = r ρ(|i − j|)`.
    pub fn sample_pair(&self, cross_corr: f64, seed: u64) -> Result<(TimeSeries, TimeSeries)> {
        if cross_corr.is_nan() || cross_corr.abs() > 1.0 {
            return Err(Error::param(
                "cross_corr",
                format!("must lie in [-1, 1], got {cross_corr}"),
            ));
        }
        let z = self.sample(derive_seed(seed, 0));
        if cross_corr.abs() == 1.0 {
            let values = z.values().iter().map(|v| cross_corr * v).collect();
            let meta = z.meta.clone();
            return Ok((z, TimeSeries::from_finite(values, meta)));
        }
        let other = self.sample(derive_seed(seed, 1));
        let mix = (1.0 - cross_corr * cross_corr).sqrt();
        let values = z
            .values()
            .iter()
            .zip(other.values())
            .map(|(a, b)| cross_corr * a + mix * b)
            .collect();
        let meta = other.meta.clone();
        Ok((z, TimeSeries::from_finite(values, meta)))
    }
}

/// Eigenvalues of the circulant embedding of length `2n`, with values in
/// `[-EIGEN_TOLERANCE, 0)` clamped to 0.
pub fn circulant_eigenvalues(spec: HurstSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    let n = spec.length;
    let m = 2 * n;
    let mut row: Vec<Complex64> = Vec::with_capacity(m);
    for k in 0..=n {
        row.push(Complex64::new(fgn_autocov(k as u64, spec.hurst), 0.0));
    }
    for k in (1..n).rev() {
        row.push(Complex64::new(fgn_autocov(k as u64, spec.hurst), 0.0));
    }
    FftPlanner::new().plan_fft_forward(m).process(&mut row);
    row.iter()
        .enumerate()
        .map(|(index, c)| {
            let value = c.re;
            if value < -EIGEN_TOLERANCE || !value.is_finite() {
                Err(Error::EmbeddingFailure {
                    index,
                    value,
                    tolerance: EIGEN_TOLERANCE,
                })
            } else {
                Ok(value.max(0.0))
            }
        })
        .collect()
}

/// Raw (unclamped) minimum eigenvalue of the embedding; diagnostic only.
pub fn min_circulant_eigenvalue(spec: HurstSpec) -> Result<f64> {
    spec.validate()?;
    let n = spec.length;
    let mut row: Vec<Complex64> = (0..=n)
        .chain((1..n).rev())
        .map(|k| Complex64::new(fgn_autocov(k as u64, spec.hurst), 0.0))
        .collect();
    FftPlanner::new().plan_fft_forward(2 * n).process(&mut row);
    Ok(row.iter().map(|c| c.re).fold(f64::INFINITY, f64::min))
}

pub fn generate_fgn(spec: HurstSpec, seed: u64) -> Result<TimeSeries> {
    Ok(FgnGenerator::new(spec)?.sample(seed))
}

pub fn generate_correlated_pair(
    spec: HurstSpec,
    cross_corr: f64,
    seed: u64,
) -> Result<(TimeSeries, TimeSeries)> {
    FgnGenerator::new(spec)?.sample_pair(cross_corr, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn autocov_examples() {
        assert_eq!(fgn_autocov(0, 0.7), 1.0);
        assert!(fgn_autocov(3, 0.5).abs() < 1e-15);
        let want = 0.5 * (2f64.powf(1.8) - 2.0);
        assert!((fgn_autocov(1, 0.9) - want).abs() < 1e-15);
        assert!((fgn_autocov(1, 0.9) - 0.741101).abs() < 5e-7);
    }

    #[test]
    fn spec_validation() {
        assert!(HurstSpec::new(0.0, 10).is_err());
        assert!(HurstSpec::new(1.0, 10).is_err());
        assert!(HurstSpec::new(1.2, 10).is_err());
        assert!(HurstSpec::new(0.7, 1).is_err());
        let s = HurstSpec::new(0.7, 10).unwrap();
        assert!((s.lrd_param() - 0.6).abs() < 1e-15);
        assert!(s.is_long_range());
        assert!(!HurstSpec::new(0.5, 10).unwrap().is_long_range());
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = HurstSpec::new(0.7, 64).unwrap();
        let a = generate_fgn(spec, 42).unwrap();
        let b = generate_fgn(spec, 42).unwrap();
        assert_eq!(a.values(), b.values());
        assert_eq!(a.len(), 64);
        let c = generate_fgn(spec, 43).unwrap();
        assert_ne!(a.values(), c.values());
    }

    #[test]
    fn embedding_is_nonnegative_across_hurst_grid() {
        for &n in &[2usize, 3, 17, 100, 1000, 4096] {
            for i in 1..100 {
                let h = i as f64 / 100.0;
                let min = min_circulant_eigenvalue(HurstSpec::new(h, n).unwrap()).unwrap();
                assert!(min >= -EIGEN_TOLERANCE, "H={h}, n={n}: {min}");
            }
        }
    }

    #[test]
    fn perfect_correlation_copies() {
        let spec = HurstSpec::new(0.6, 128).unwrap();
        let (z, zt) = generate_correlated_pair(spec, 1.0, 5).unwrap();
        assert_eq!(z.values(), zt.values());
        assert!(generate_correlated_pair(spec, 1.5, 5).is_err());
    }

    #[test]
    fn autocov_partial_sums_grow_like_power() {
        // Σ_{|k|≤K} ρ(k) telescopes to (K+1)^{2H} − K^{2H} ~ 2H K^{2H−1}
        for &h in &[0.6, 0.7, 0.8, 0.9] {
            let sum = |kk: u64| 1.0 + 2.0 * (1..=kk).map(|k| fgn_autocov(k, h)).sum::<f64>();
            let exact = |kk: f64| (kk + 1.0).powf(2.0 * h) - kk.powf(2.0 * h);
            assert!((sum(1000) - exact(1000.0)).abs() < 1e-8);
            let doubling = sum(2000) / sum(1000);
            let target = 2f64.powf(2.0 * h - 1.0);
            assert!((doubling / target - 1.0).abs() < 0.2, "H={h}: {doubling} vs {target}");
            let decade = sum(10_000) / sum(1000);
            let target = 10f64.powf(2.0 * h - 1.0);
            assert!((decade / target - 1.0).abs() < 0.2, "H={h}: {decade} vs {target}");
        }
    }
}
